#include "stampgate/packet_manager.hpp"

#include <algorithm>

#include "stampgate/error.hpp"

namespace stampgate {

std::string_view to_string(AcceptOutcome v) noexcept {
    switch (v) {
        case AcceptOutcome::ToStampCheck: return "ToStampCheck";
        case AcceptOutcome::DropDuplicate: return "DropDuplicate";
        case AcceptOutcome::DropUnknownPlan: return "DropUnknownPlan";
    }
    return "Unknown";
}

PacketManager::PacketManager(std::uint32_t payload_cap, StampEngine& stamps, EndpointDirector& director)
    : payload_cap_(payload_cap), stamps_(stamps), director_(director) {
    if (payload_cap == 0) throw Error(Errc::InvalidArgument, "payload_cap must be > 0");
}

const TransferPlan& PacketManager::plan_transfer(const TransferSpec& spec, const Ticket& ticket,
                                                 SourceAddr src, Tick now) {
    if (spec.total_size == 0) throw Error(Errc::EmptyTransfer, "total_size must be > 0");
    if (!ticket.valid_at(now)) throw Error(Errc::TicketExpired, "ticket not valid at this tick");
    if (!ticket.services.contains(spec.service)) {
        throw Error(Errc::ServiceNotPermitted, std::string(to_string(spec.service)) + " not on ticket");
    }
    const std::uint64_t count = (spec.total_size + payload_cap_ - 1) / payload_cap_;
    if (count > UINT32_MAX) throw Error(Errc::InvalidArgument, "transfer needs too many packets");

    TransferPlan plan;
    plan.plan_id = next_plan_++;
    plan.spec = spec;
    plan.entries.reserve(count);
    std::uint64_t remaining = spec.total_size;
    for (std::uint32_t seq = 0; seq < count; ++seq) {
        PacketHeader h;
        h.plan_id = plan.plan_id;
        h.seq = seq;
        h.payload_len = static_cast<std::uint32_t>(std::min<std::uint64_t>(remaining, payload_cap_));
        h.source = src;
        h.kind = PacketKind::Data;
        // The endpoint is part of the stamped header, so it is fixed first.
        h.dest = director_.assign_endpoint(plan.plan_id, seq, src, spec.client, now);
        remaining -= h.payload_len;
        plan.entries.push_back(PlanEntry{h, stamps_.issue_stamp(h, now), h.dest});
    }
    plan.received.assign(count, false);
    plan.next_endpoint = director_.next_endpoint(spec.client, now);
    auto [it, inserted] = plans_.emplace(plan.plan_id, std::move(plan));
    return it->second;
}

AcceptOutcome PacketManager::accept_packet(const Packet& p, Tick /*now*/) {
    auto it = plans_.find(p.clear_header.plan_id);
    if (it == plans_.end()) return AcceptOutcome::DropUnknownPlan;
    auto& received = it->second.received;
    const auto seq = p.clear_header.seq;
    if (seq >= received.size()) return AcceptOutcome::DropUnknownPlan;
    if (received[seq]) return AcceptOutcome::DropDuplicate;
    received[seq] = true;
    return AcceptOutcome::ToStampCheck;
}

const TransferPlan* PacketManager::find(std::uint64_t plan_id) const {
    auto it = plans_.find(plan_id);
    return it == plans_.end() ? nullptr : &it->second;
}

void PacketManager::expire_client(ClientId client) {
    std::erase_if(plans_, [client](const auto& kv) { return kv.second.spec.client == client; });
}

}  // namespace stampgate
