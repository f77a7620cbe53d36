#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "stampgate/acc_codec.hpp"
#include "stampgate/assembly_checker.hpp"
#include "stampgate/core_model.hpp"
#include "stampgate/cost_table.hpp"
#include "stampgate/endpoint_director.hpp"
#include "stampgate/packet_manager.hpp"
#include "stampgate/stamp_engine.hpp"

namespace stampgate {

enum class GatewayOutcome {
    DropUnexpected,
    DropGarbled,
    DropSpoofed,
    DropDuplicate,
    DropUnknownPlan,
    DropBadStamp,
    DropOverflow,
    DropThreat,
    DropRefused,
    Forwarded,
    PlanDelivered,
    NextEndpointSent,
};

std::string_view to_string(GatewayOutcome v) noexcept;

struct GatewayConfig {
    FreshnessWindow freshness;
    // Charge the full check time wherever a cheap drop would be charged. Used
    // only to price the counterfactual pipeline that checks every packet.
    bool force_full_check = false;
};

struct GatewayResult {
    GatewayOutcome outcome = GatewayOutcome::DropUnexpected;
    Units units = 0;
    Units header_units = 0;  // portion spent before the body was touched
    bool expected = false;
    std::optional<VerifyOutcome> stamp;
    std::optional<Delivery> delivery;
    std::optional<std::string> threat_rule;
    std::optional<ClientId> terminated;
    // Sealed downlink for PlanDelivered / NextEndpointSent.
    std::optional<ClientId> reply_to;
    Bytes reply;
};

struct Session {
    ClientId client;
    SourceAddr source;
    crypto::MasterKey master;
    Ticket ticket;
    std::optional<std::uint32_t> last_control_seq;
};

// Multi-endpoint intake for authenticated clients. Per datagram, in order:
// expectation lookup on the clear header, body open under the per-packet key,
// inner/clear header comparison, duplicate filter, stamp verification,
// reassembly and scan.
class AccGateway {
public:
    AccGateway(GatewayConfig config, CostTable costs, EndpointDirector& director, PacketManager& packets,
               StampEngine& stamps, AssemblyChecker& assembly);

    void open_session(ClientId client, SourceAddr src, const crypto::MasterKey& master, const Ticket& ticket);

    GatewayResult receive(EndpointId endpoint, const Packet& datagram, Tick now);

    // Throws Error(UnknownClient), Error(ServiceNotPermitted), Error(TicketExpired)
    // or Error(EmptyTransfer).
    const TransferPlan& request_transfer(ClientId client, const TransferSpec& spec, Tick now);

    void terminate(ClientId client);

    [[nodiscard]] std::uint64_t open_calls() const noexcept { return open_calls_; }
    [[nodiscard]] const std::set<ClientId>& terminated() const noexcept { return terminated_; }
    [[nodiscard]] const Session* session(ClientId client) const;
    [[nodiscard]] const GatewayConfig& config() const noexcept { return config_; }
    [[nodiscard]] const CostTable& costs() const noexcept { return costs_; }

private:
    Units drop_charge() const noexcept { return config_.force_full_check ? costs_.stamp_check : costs_.drop; }
    GatewayResult& finish_drop(GatewayResult& r, GatewayOutcome o, bool terminate_client, ClientId client);
    GatewayResult receive_data(const Packet& datagram, Tick now, GatewayResult r);
    GatewayResult receive_control(const Packet& datagram, Tick now, GatewayResult r);

    GatewayConfig config_;
    CostTable costs_;
    EndpointDirector& director_;
    PacketManager& packets_;
    StampEngine& stamps_;
    AssemblyChecker& assembly_;
    std::map<ClientId, Session> sessions_;
    std::set<ClientId> terminated_;
    std::uint64_t open_calls_ = 0;
};

}  // namespace stampgate
