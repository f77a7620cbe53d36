#include "stampgate/server.hpp"

#include "stampgate/error.hpp"

namespace stampgate {

Server::Server(ServerConfig config)
    : config_(std::move(config)),
      director_(config_.endpoints, config_.policy.ticket_lifetime),
      stamps_(config_.stamp_key),
      packets_(config_.payload_cap, stamps_, director_),
      assembly_(config_.scan_rules),
      gateway_(config_.gateway, config_.costs, director_, packets_, stamps_, assembly_) {
    if (config_.p == 0) throw Error(Errc::DivisorZero, "p must be > 0");
    if (capacity() == 0) throw Error(Errc::CapacityZero, "s / p rounds to zero clients");
    filter_ = std::make_unique<FilterRedirect>(config_.filter, config_.costs, [this] {
        return LoadSample{director_.live_sessions(now_), capacity()};
    });
    tickets_ = std::make_unique<TicketEngine>(siv_, config_.policy, *filter_, director_, config_.key_seed);
}

CaResult Server::handle_ca(ByteView raw, SourceAddr src, Tick now) {
    now_ = now;
    CaResult r;
    r.filter = filter_->handle_request(raw, src, now);
    r.units = r.filter.units;
    if (r.filter.verdict != FilterVerdict::ForwardToTicketEngine) return r;

    r.units += config_.costs.siv_validate;
    r.auth = tickets_->authenticate(*r.filter.signature, src, now);
    if (const auto* issued = std::get_if<AuthIssued>(&*r.auth)) {
        gateway_.open_session(issued->ticket.client, src, issued->master, issued->ticket);
    }
    return r;
}

GatewayResult Server::handle_acc(EndpointId endpoint, const Packet& datagram, Tick now) {
    now_ = now;
    return gateway_.receive(endpoint, datagram, now);
}

}  // namespace stampgate
