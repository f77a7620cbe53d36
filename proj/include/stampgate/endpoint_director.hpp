#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "stampgate/core_model.hpp"

namespace stampgate {

struct SessionScope {
    bool operator==(const SessionScope&) const = default;
};
struct PacketScope {
    std::uint64_t plan_id = 0;
    std::uint32_t seq = 0;
    bool operator==(const PacketScope&) const = default;
};
using ExpectationScope = std::variant<SessionScope, PacketScope>;

struct Expectation {
    EndpointId endpoint;
    SourceAddr source;
    ClientId client;
    ExpectationScope scope;
    Tick expires_at = 0;
};

// What an endpoint can learn from a clear header without opening anything.
struct HeaderSummary {
    PacketKind kind = PacketKind::Data;
    std::uint64_t plan_id = 0;  // ClientId value for Control
    std::uint32_t seq = 0;

    static HeaderSummary of(const PacketHeader& h) noexcept { return {h.kind, h.plan_id, h.seq}; }
};

// Assigns endpoints to clients and packets and publishes the expectations each
// endpoint filters against. Least-loaded assignment, lowest index on ties.
//
// Packet-scope matching is on (endpoint, plan_id, seq); the claimed source is
// bound later by the sealed inner header. Session-scope matching is on
// (endpoint, source, client).
class EndpointDirector {
public:
    EndpointDirector(std::uint16_t endpoint_count, Tick session_lifetime);

    EndpointId register_client(ClientId client, SourceAddr src, Tick now);
    // Throws Error(UnknownClient) without a live session.
    EndpointId assign_endpoint(std::uint64_t plan_id, std::uint32_t seq, SourceAddr src, ClientId client,
                               Tick now);
    EndpointId next_endpoint(ClientId client, Tick now);
    [[nodiscard]] bool is_expected(EndpointId endpoint, SourceAddr src, const HeaderSummary& summary,
                                   Tick now) const;

    // Drops every expectation of the client (session termination).
    void revoke_client(ClientId client);
    // Removes expectations with expires_at <= now.
    void expire(Tick now);

    [[nodiscard]] std::uint16_t endpoint_count() const noexcept { return endpoint_count_; }
    [[nodiscard]] std::vector<std::uint64_t> loads(Tick now);
    [[nodiscard]] std::uint64_t live_sessions(Tick now);
    [[nodiscard]] std::optional<Expectation> session_of(ClientId client, Tick now) const;
    [[nodiscard]] std::optional<Expectation> packet_expectation(std::uint64_t plan_id, std::uint32_t seq,
                                                                Tick now) const;
    [[nodiscard]] std::optional<Tick> session_expiry(ClientId client) const;

private:
    EndpointId least_loaded() const;
    void add(const Expectation& e);
    void remove_packet(std::map<std::pair<std::uint64_t, std::uint32_t>, Expectation>::iterator it);

    std::uint16_t endpoint_count_;
    Tick session_lifetime_;
    std::vector<std::uint64_t> load_;
    std::map<ClientId, Expectation> sessions_;
    std::map<std::pair<std::uint64_t, std::uint32_t>, Expectation> packets_;
    std::map<ClientId, std::vector<std::pair<std::uint64_t, std::uint32_t>>> packets_by_client_;
    std::map<ClientId, Tick> session_expiry_;
};

}  // namespace stampgate
