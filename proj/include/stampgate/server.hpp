#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>

#include "stampgate/acc_gateway.hpp"
#include "stampgate/assembly_checker.hpp"
#include "stampgate/endpoint_director.hpp"
#include "stampgate/filter_redirect.hpp"
#include "stampgate/packet_manager.hpp"
#include "stampgate/stamp_engine.hpp"
#include "stampgate/ticket_engine.hpp"

namespace stampgate {

struct ServerConfig {
    std::uint16_t endpoints = 4;
    Units units_per_tick = 1200;
    Units p = 12;
    FilterConfig filter;
    ServicePolicy policy;
    std::uint32_t payload_cap = 1024;
    GatewayConfig gateway;
    CostTable costs;
    ScanRuleSet scan_rules;
    std::uint64_t key_seed = 0;
    StampKey stamp_key;
};

struct CaResult {
    FilterOutcome filter;
    std::optional<AuthOutcome> auth;  // set when the filter forwarded
    Units units = 0;
};

// Both channels wired together the way a deployment would own them. The
// filter's load probe reads live sessions from the director at the tick of
// the request being handled.
class Server {
public:
    explicit Server(ServerConfig config);
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    void register_signature(const Signature& sig, const crypto::MasterKey& holder_key) {
        siv_.add(sig, holder_key);
    }

    CaResult handle_ca(ByteView raw, SourceAddr src, Tick now);
    GatewayResult handle_acc(EndpointId endpoint, const Packet& datagram, Tick now);

    [[nodiscard]] std::uint64_t capacity() const noexcept { return config_.units_per_tick / config_.p; }
    [[nodiscard]] const ServerConfig& config() const noexcept { return config_; }

    FilterRedirect& filter() noexcept { return *filter_; }
    TicketEngine& tickets() noexcept { return *tickets_; }
    EndpointDirector& director() noexcept { return director_; }
    StampEngine& stamps() noexcept { return stamps_; }
    PacketManager& packets() noexcept { return packets_; }
    AssemblyChecker& assembly() noexcept { return assembly_; }
    AccGateway& gateway() noexcept { return gateway_; }
    SivRegistry& siv() noexcept { return siv_; }

private:
    ServerConfig config_;
    Tick now_ = 0;
    SivRegistry siv_;
    EndpointDirector director_;
    StampEngine stamps_;
    PacketManager packets_;
    AssemblyChecker assembly_;
    AccGateway gateway_;
    std::unique_ptr<FilterRedirect> filter_;
    std::unique_ptr<TicketEngine> tickets_;
};

}  // namespace stampgate
