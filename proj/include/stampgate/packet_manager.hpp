#pragma once

#include <cstdint>
#include <map>

#include "stampgate/core_model.hpp"
#include "stampgate/endpoint_director.hpp"
#include "stampgate/stamp_engine.hpp"

namespace stampgate {

enum class AcceptOutcome { ToStampCheck, DropDuplicate, DropUnknownPlan };

std::string_view to_string(AcceptOutcome v) noexcept;

// Designs every packet of a transfer up front and de-duplicates arrivals.
class PacketManager {
public:
    PacketManager(std::uint32_t payload_cap, StampEngine& stamps, EndpointDirector& director);

    // Throws Error(EmptyTransfer), Error(TicketExpired) or Error(ServiceNotPermitted).
    const TransferPlan& plan_transfer(const TransferSpec& spec, const Ticket& ticket, SourceAddr src, Tick now);

    // Marks the seq as received the first time it is seen.
    AcceptOutcome accept_packet(const Packet& p, Tick now);

    [[nodiscard]] const TransferPlan* find(std::uint64_t plan_id) const;
    // Plans live only as long as their client's session.
    void expire_client(ClientId client);

    [[nodiscard]] std::uint32_t payload_cap() const noexcept { return payload_cap_; }
    [[nodiscard]] std::size_t plan_count() const noexcept { return plans_.size(); }

private:
    std::uint32_t payload_cap_;
    StampEngine& stamps_;
    EndpointDirector& director_;
    std::uint64_t next_plan_ = 1;
    std::map<std::uint64_t, TransferPlan> plans_;
};

}  // namespace stampgate
