#include "stampgate/core_model.hpp"

#include <algorithm>

#include "stampgate/error.hpp"

namespace stampgate {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::CapacityZero: return "CapacityZero";
        case Errc::UnknownSource: return "UnknownSource";
        case Errc::EmptyTransfer: return "EmptyTransfer";
        case Errc::ServiceNotPermitted: return "ServiceNotPermitted";
        case Errc::TicketExpired: return "TicketExpired";
        case Errc::UnknownClient: return "UnknownClient";
        case Errc::UnknownPlan: return "UnknownPlan";
        case Errc::OverflowFragment: return "OverflowFragment";
        case Errc::DivisorZero: return "DivisorZero";
        case Errc::ScenarioMismatch: return "ScenarioMismatch";
        case Errc::ConfigInvalid: return "ConfigInvalid";
        case Errc::MalformedBytes: return "MalformedBytes";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

void put_be(Bytes& out, std::uint64_t v, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint64_t get_be(ByteView in, std::size_t offset, std::size_t width) {
    if (offset + width > in.size()) {
        throw Error(Errc::MalformedBytes, "read past end of buffer");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
        v = (v << 8) | in[offset + i];
    }
    return v;
}

std::string to_hex(ByteView bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

std::uint16_t signature_checksum(std::uint16_t issuer, std::uint64_t serial) noexcept {
    std::uint32_t sum = issuer;
    for (int shift = 48; shift >= 0; shift -= 16) {
        sum += static_cast<std::uint16_t>(serial >> shift);
        sum = (sum & 0xffffU) + (sum >> 16);  // end-around carry
    }
    sum = (sum & 0xffffU) + (sum >> 16);
    return static_cast<std::uint16_t>(sum);
}

Signature make_signature(std::uint16_t issuer, std::uint64_t serial) noexcept {
    return Signature{issuer, serial, signature_checksum(issuer, serial)};
}

bool is_well_formed(const Signature& sig) noexcept {
    return sig.checksum == signature_checksum(sig.issuer, sig.serial);
}

std::string_view to_string(ServiceCategory category) noexcept {
    switch (category) {
        case ServiceCategory::Message: return "MESSAGE";
        case ServiceCategory::FileUpload: return "FILE_UPLOAD";
        case ServiceCategory::Query: return "QUERY";
    }
    return "UNKNOWN";
}

std::optional<ServiceCategory> parse_service(std::string_view name) noexcept {
    if (name == "MESSAGE") return ServiceCategory::Message;
    if (name == "FILE_UPLOAD") return ServiceCategory::FileUpload;
    if (name == "QUERY") return ServiceCategory::Query;
    return std::nullopt;
}

std::vector<ServiceCategory> ServiceSet::to_vector() const {
    std::vector<ServiceCategory> out;
    for (auto c : {ServiceCategory::Message, ServiceCategory::FileUpload, ServiceCategory::Query}) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

HeaderBytes canonical_header_bytes(const PacketHeader& h) noexcept {
    HeaderBytes out{};
    std::size_t pos = 0;
    auto put = [&](std::uint64_t v, std::size_t width) {
        for (std::size_t i = width; i-- > 0;) out[pos++] = static_cast<std::uint8_t>(v >> (8 * i));
    };
    put(h.plan_id, 8);
    put(h.seq, 4);
    put(h.payload_len, 4);
    put(h.source.value, 4);
    put(h.dest.index, 2);
    put(static_cast<std::uint8_t>(h.kind), 1);
    return out;
}

PacketHeader parse_header(ByteView bytes) {
    if (bytes.size() < kHeaderBytes) {
        throw Error(Errc::MalformedBytes, "header needs 23 bytes");
    }
    PacketHeader h;
    h.plan_id = get_be(bytes, 0, 8);
    h.seq = static_cast<std::uint32_t>(get_be(bytes, 8, 4));
    h.payload_len = static_cast<std::uint32_t>(get_be(bytes, 12, 4));
    h.source.value = static_cast<std::uint32_t>(get_be(bytes, 16, 4));
    h.dest.index = static_cast<std::uint16_t>(get_be(bytes, 20, 2));
    const auto kind = bytes[22];
    if (kind > static_cast<std::uint8_t>(PacketKind::Control)) {
        throw Error(Errc::MalformedBytes, "unknown packet kind");
    }
    h.kind = static_cast<PacketKind>(kind);
    return h;
}

Bytes encode_datagram(const Packet& p) {
    const auto header = canonical_header_bytes(p.clear_header);
    Bytes out(kHeaderBytes + p.sealed_body.size());
    std::copy(header.begin(), header.end(), out.begin());
    std::copy(p.sealed_body.begin(), p.sealed_body.end(), out.begin() + kHeaderBytes);
    return out;
}

Packet decode_datagram(ByteView wire) {
    Packet p;
    p.clear_header = parse_header(wire);
    p.sealed_body.assign(wire.begin() + kHeaderBytes, wire.end());
    return p;
}

std::array<std::uint8_t, kStampPlainBytes> encode_stamp_contents(const StampContents& c) noexcept {
    std::array<std::uint8_t, kStampPlainBytes> out{};
    std::copy(c.header_digest.begin(), c.header_digest.end(), out.begin());
    for (std::size_t i = 0; i < 8; ++i) {
        out[32 + i] = static_cast<std::uint8_t>(c.issued_at >> (8 * (7 - i)));
        out[40 + i] = static_cast<std::uint8_t>(c.serial >> (8 * (7 - i)));
    }
    return out;
}

StampContents decode_stamp_contents(ByteView bytes) {
    if (bytes.size() != kStampPlainBytes) {
        throw Error(Errc::MalformedBytes, "stamp plaintext must be 48 bytes");
    }
    StampContents c;
    std::copy_n(bytes.begin(), 32, c.header_digest.begin());
    c.issued_at = get_be(bytes, 32, 8);
    c.serial = get_be(bytes, 40, 8);
    return c;
}

bool TransferPlan::complete() const noexcept {
    return !received.empty() && std::all_of(received.begin(), received.end(), [](bool b) { return b; });
}

}  // namespace stampgate
