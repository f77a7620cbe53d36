#include "stampgate/acc_codec.hpp"

#include <algorithm>

#include "stampgate/error.hpp"
#include "stampgate/stamp_engine.hpp"

namespace stampgate::acc {

crypto::DynamicKey data_key(const crypto::MasterKey& master, const PacketHeader& h) {
    return crypto::derive_key(master, h.seq, h.plan_id);
}

crypto::DynamicKey control_key(const crypto::MasterKey& master, ClientId client, std::uint32_t seq) {
    return crypto::derive_key(master, seq, client.value);
}

crypto::DynamicKey reply_key(const crypto::MasterKey& master, ClientId client, std::uint32_t seq) {
    return crypto::derive_key(master, (std::uint64_t{1} << 32) | seq, client.value);
}

Packet seal_data_packet(const PlanEntry& entry, const crypto::MasterKey& master, ByteView payload) {
    const auto header = canonical_header_bytes(entry.header);
    Bytes plain(header.begin(), header.end());
    plain.insert(plain.end(), entry.stamp.token.begin(), entry.stamp.token.end());
    plain.insert(plain.end(), payload.begin(), payload.end());
    return Packet{entry.header, crypto::seal(data_key(master, entry.header), plain)};
}

std::optional<DataBody> parse_data_body(ByteView plain) {
    if (plain.size() < kHeaderBytes + kStampTokenBytes) return std::nullopt;
    DataBody body;
    try {
        body.inner = parse_header(plain.first(kHeaderBytes));
    } catch (const Error&) {
        return std::nullopt;
    }
    const auto stamp = plain.subspan(kHeaderBytes, kStampTokenBytes);
    body.stamp.token.assign(stamp.begin(), stamp.end());
    const auto payload = plain.subspan(kHeaderBytes + kStampTokenBytes);
    body.payload.assign(payload.begin(), payload.end());
    return body;
}

PacketHeader control_header(ClientId client, SourceAddr src, EndpointId endpoint, std::uint32_t seq) {
    PacketHeader h;
    h.plan_id = client.value;
    h.seq = seq;
    h.source = src;
    h.dest = endpoint;
    h.kind = PacketKind::Control;
    return h;
}

namespace {

Packet seal_control(PacketHeader h, ControlOp op, const Bytes& extra, const crypto::MasterKey& master) {
    h.payload_len = static_cast<std::uint32_t>(1 + extra.size());
    const auto header = canonical_header_bytes(h);
    Bytes plain(header.begin(), header.end());
    plain.push_back(static_cast<std::uint8_t>(op));
    plain.insert(plain.end(), extra.begin(), extra.end());
    return Packet{h, crypto::seal(control_key(master, ClientId{h.plan_id}, h.seq), plain)};
}

}  // namespace

Packet seal_transfer_request(ClientId client, SourceAddr src, EndpointId endpoint, std::uint32_t seq,
                             const TransferSpec& spec, const crypto::MasterKey& master) {
    Bytes extra;
    put_be(extra, spec.total_size, 8);
    extra.push_back(static_cast<std::uint8_t>(spec.service));
    extra.insert(extra.end(), spec.content_digest.begin(), spec.content_digest.end());
    const auto name_len = std::min<std::size_t>(spec.name.size(), 0xffff);
    put_be(extra, name_len, 2);
    extra.insert(extra.end(), spec.name.begin(), spec.name.begin() + static_cast<std::ptrdiff_t>(name_len));
    return seal_control(control_header(client, src, endpoint, seq), ControlOp::TransferRequest, extra, master);
}

Packet seal_next_endpoint_request(ClientId client, SourceAddr src, EndpointId endpoint, std::uint32_t seq,
                                  const crypto::MasterKey& master) {
    return seal_control(control_header(client, src, endpoint, seq), ControlOp::NextEndpointRequest, {}, master);
}

std::optional<ControlBody> parse_control_body(ByteView plain, ClientId client) {
    if (plain.size() < kHeaderBytes + 1) return std::nullopt;
    ControlBody body;
    try {
        body.inner = parse_header(plain.first(kHeaderBytes));
        const auto op = plain[kHeaderBytes];
        if (op == static_cast<std::uint8_t>(ControlOp::NextEndpointRequest)) {
            body.op = ControlOp::NextEndpointRequest;
            return body;
        }
        if (op != static_cast<std::uint8_t>(ControlOp::TransferRequest)) return std::nullopt;
        body.op = ControlOp::TransferRequest;
        const auto rest = plain.subspan(kHeaderBytes + 1);
        if (rest.size() < 43) return std::nullopt;
        TransferSpec spec;
        spec.client = client;
        spec.total_size = get_be(rest, 0, 8);
        if (rest[8] > static_cast<std::uint8_t>(ServiceCategory::Query)) return std::nullopt;
        spec.service = static_cast<ServiceCategory>(rest[8]);
        std::copy_n(rest.begin() + 9, 32, spec.content_digest.begin());
        const auto name_len = get_be(rest, 41, 2);
        if (rest.size() != 43 + name_len) return std::nullopt;
        spec.name.assign(rest.begin() + 43, rest.end());
        body.spec = std::move(spec);
        return body;
    } catch (const Error&) {
        return std::nullopt;
    }
}

Bytes encode_plan_delivery(const TransferPlan& plan) {
    Bytes out;
    put_be(out, plan.plan_id, 8);
    put_be(out, plan.next_endpoint.index, 2);
    put_be(out, plan.entries.size(), 4);
    for (const auto& e : plan.entries) {
        const auto h = canonical_header_bytes(e.header);
        out.insert(out.end(), h.begin(), h.end());
        put_be(out, e.endpoint.index, 2);
        out.insert(out.end(), e.stamp.token.begin(), e.stamp.token.end());
    }
    return out;
}

std::optional<ClientPlan> decode_plan_delivery(ByteView plain) {
    constexpr std::size_t kEntry = kHeaderBytes + 2 + kStampTokenBytes;
    try {
        ClientPlan plan;
        plan.plan_id = get_be(plain, 0, 8);
        plan.next_endpoint.index = static_cast<std::uint16_t>(get_be(plain, 8, 2));
        const auto count = get_be(plain, 10, 4);
        if (plain.size() != 14 + count * kEntry) return std::nullopt;
        plan.entries.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            const auto rec = plain.subspan(14 + i * kEntry, kEntry);
            PlanEntry e;
            e.header = parse_header(rec.first(kHeaderBytes));
            e.endpoint.index = static_cast<std::uint16_t>(get_be(rec, kHeaderBytes, 2));
            const auto token = rec.subspan(kHeaderBytes + 2);
            e.stamp.token.assign(token.begin(), token.end());
            plan.entries.push_back(std::move(e));
        }
        return plan;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace stampgate::acc
