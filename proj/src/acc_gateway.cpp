#include "stampgate/acc_gateway.hpp"

#include "stampgate/error.hpp"

namespace stampgate {

std::string_view to_string(GatewayOutcome v) noexcept {
    switch (v) {
        case GatewayOutcome::DropUnexpected: return "DropUnexpected";
        case GatewayOutcome::DropGarbled: return "DropGarbled";
        case GatewayOutcome::DropSpoofed: return "DropSpoofed";
        case GatewayOutcome::DropDuplicate: return "DropDuplicate";
        case GatewayOutcome::DropUnknownPlan: return "DropUnknownPlan";
        case GatewayOutcome::DropBadStamp: return "DropBadStamp";
        case GatewayOutcome::DropOverflow: return "DropOverflow";
        case GatewayOutcome::DropThreat: return "DropThreat";
        case GatewayOutcome::DropRefused: return "DropRefused";
        case GatewayOutcome::Forwarded: return "Forwarded";
        case GatewayOutcome::PlanDelivered: return "PlanDelivered";
        case GatewayOutcome::NextEndpointSent: return "NextEndpointSent";
    }
    return "Unknown";
}

AccGateway::AccGateway(GatewayConfig config, CostTable costs, EndpointDirector& director,
                       PacketManager& packets, StampEngine& stamps, AssemblyChecker& assembly)
    : config_(config),
      costs_(costs),
      director_(director),
      packets_(packets),
      stamps_(stamps),
      assembly_(assembly) {}

void AccGateway::open_session(ClientId client, SourceAddr src, const crypto::MasterKey& master,
                              const Ticket& ticket) {
    sessions_[client] = Session{client, src, master, ticket, std::nullopt};
}

const Session* AccGateway::session(ClientId client) const {
    auto it = sessions_.find(client);
    return it == sessions_.end() ? nullptr : &it->second;
}

void AccGateway::terminate(ClientId client) {
    director_.revoke_client(client);
    packets_.expire_client(client);
    assembly_.drop_client(client);
    sessions_.erase(client);
    terminated_.insert(client);
}

GatewayResult& AccGateway::finish_drop(GatewayResult& r, GatewayOutcome o, bool terminate_client,
                                       ClientId client) {
    r.outcome = o;
    r.units += drop_charge();
    if (terminate_client) {
        terminate(client);
        r.terminated = client;
    }
    return r;
}

const TransferPlan& AccGateway::request_transfer(ClientId client, const TransferSpec& spec, Tick now) {
    auto it = sessions_.find(client);
    if (it == sessions_.end()) throw Error(Errc::UnknownClient, "no session for client");
    if (spec.client != client) throw Error(Errc::InvalidArgument, "transfer spec names another client");
    const auto& plan = packets_.plan_transfer(spec, it->second.ticket, it->second.source, now);
    std::vector<std::uint32_t> lengths;
    lengths.reserve(plan.entries.size());
    for (const auto& e : plan.entries) lengths.push_back(e.header.payload_len);
    assembly_.open_plan(plan.plan_id, client, std::move(lengths));
    return plan;
}

GatewayResult AccGateway::receive(EndpointId endpoint, const Packet& datagram, Tick now) {
    GatewayResult r;
    r.units = costs_.header_inspect;
    const auto& h = datagram.clear_header;
    if (!director_.is_expected(endpoint, h.source, HeaderSummary::of(h), now)) {
        r.outcome = GatewayOutcome::DropUnexpected;
        r.units += drop_charge();
        r.header_units = r.units;
        return r;
    }
    r.header_units = r.units;
    r.expected = true;
    if (h.kind == PacketKind::Control) return receive_control(datagram, now, std::move(r));
    return receive_data(datagram, now, std::move(r));
}

GatewayResult AccGateway::receive_data(const Packet& datagram, Tick now, GatewayResult r) {
    const auto& h = datagram.clear_header;
    const auto* plan = packets_.find(h.plan_id);
    const Session* owner = plan ? session(plan->spec.client) : nullptr;
    if (owner == nullptr) {
        const auto exp = director_.packet_expectation(h.plan_id, h.seq, now);
        return finish_drop(r, GatewayOutcome::DropUnknownPlan, exp.has_value(),
                           exp ? exp->client : ClientId{});
    }
    const auto client = owner->client;

    ++open_calls_;
    r.units += costs_.open_body;
    const auto plain = crypto::open(acc::data_key(owner->master, h), datagram.sealed_body);
    if (!plain) return finish_drop(r, GatewayOutcome::DropGarbled, false, client);
    auto body = acc::parse_data_body(*plain);
    if (!body) return finish_drop(r, GatewayOutcome::DropGarbled, false, client);
    if (body->inner != h) return finish_drop(r, GatewayOutcome::DropSpoofed, false, client);

    switch (packets_.accept_packet(datagram, now)) {
        case AcceptOutcome::DropDuplicate: return finish_drop(r, GatewayOutcome::DropDuplicate, false, client);
        case AcceptOutcome::DropUnknownPlan: return finish_drop(r, GatewayOutcome::DropUnknownPlan, true, client);
        case AcceptOutcome::ToStampCheck: break;
    }

    r.units += costs_.stamp_check;
    r.stamp = stamps_.verify_stamp(body->stamp, h, now, config_.freshness);
    if (*r.stamp != VerifyOutcome::Ok) return finish_drop(r, GatewayOutcome::DropBadStamp, true, client);

    IngestOutcome ingest;
    try {
        ingest = assembly_.ingest(h.plan_id, h.seq, body->payload);
    } catch (const Error&) {
        return finish_drop(r, GatewayOutcome::DropOverflow, true, client);
    }
    r.outcome = GatewayOutcome::Forwarded;
    if (ingest.status == IngestStatus::Completed) {
        r.units += costs_.scan_cost(ingest.assembled.size());
        const auto before = assembly_.deliveries().size();
        const auto verdict = assembly_.check_and_deliver(h.plan_id, ingest.assembled, now);
        if (!verdict.clean) {
            r.threat_rule = verdict.rule_id;
            return finish_drop(r, GatewayOutcome::DropThreat, true, client);
        }
        if (assembly_.deliveries().size() > before) r.delivery = assembly_.deliveries().back();
    }
    return r;
}

GatewayResult AccGateway::receive_control(const Packet& datagram, Tick now, GatewayResult r) {
    const auto& h = datagram.clear_header;
    const ClientId client{h.plan_id};
    auto it = sessions_.find(client);
    if (it == sessions_.end()) return finish_drop(r, GatewayOutcome::DropRefused, false, client);
    auto& s = it->second;

    ++open_calls_;
    r.units += costs_.open_body;
    const auto plain = crypto::open(acc::control_key(s.master, client, h.seq), datagram.sealed_body);
    if (!plain) return finish_drop(r, GatewayOutcome::DropGarbled, false, client);
    auto body = acc::parse_control_body(*plain, client);
    if (!body) return finish_drop(r, GatewayOutcome::DropGarbled, false, client);
    if (body->inner != h) return finish_drop(r, GatewayOutcome::DropSpoofed, false, client);
    if (s.last_control_seq && h.seq <= *s.last_control_seq) {
        return finish_drop(r, GatewayOutcome::DropDuplicate, false, client);
    }
    s.last_control_seq = h.seq;
    const auto master = s.master;

    if (body->op == acc::ControlOp::NextEndpointRequest) {
        const auto next = director_.next_endpoint(client, now);
        r.units += costs_.plan_packet;
        Bytes plain_reply;
        put_be(plain_reply, next.index, 2);
        r.outcome = GatewayOutcome::NextEndpointSent;
        r.reply_to = client;
        r.reply = crypto::seal(acc::reply_key(master, client, h.seq), plain_reply);
        return r;
    }

    try {
        const auto& plan = request_transfer(client, *body->spec, now);
        r.units += costs_.plan_packet * plan.entries.size();
        r.outcome = GatewayOutcome::PlanDelivered;
        r.reply_to = client;
        r.reply = crypto::seal(acc::reply_key(master, client, h.seq), acc::encode_plan_delivery(plan));
        return r;
    } catch (const Error&) {
        return finish_drop(r, GatewayOutcome::DropRefused, false, client);
    }
}

}  // namespace stampgate
