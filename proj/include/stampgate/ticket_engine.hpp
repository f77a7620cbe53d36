#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>

#include "stampgate/core_model.hpp"
#include "stampgate/crypto_kit.hpp"
#include "stampgate/endpoint_director.hpp"
#include "stampgate/filter_redirect.hpp"

namespace stampgate {

// In-memory stand-in for the third-party signature authority. Each valid
// signature maps to the key its holder uses to receive sealed dispatches.
class SivRegistry {
public:
    void add(const Signature& sig, const crypto::MasterKey& holder_key) { valid_[sig] = holder_key; }
    [[nodiscard]] bool contains(const Signature& sig) const { return valid_.contains(sig); }

    // Counts every call, hit or miss.
    std::optional<crypto::MasterKey> validate(const Signature& sig);

    [[nodiscard]] std::uint64_t calls() const noexcept { return calls_; }
    [[nodiscard]] std::size_t size() const noexcept { return valid_.size(); }
    [[nodiscard]] const std::map<Signature, crypto::MasterKey>& entries() const noexcept { return valid_; }

private:
    std::map<Signature, crypto::MasterKey> valid_;
    std::uint64_t calls_ = 0;
};

struct ServicePolicy {
    std::map<std::uint16_t, ServiceSet> by_issuer;
    Tick ticket_lifetime = 10'000;
};

struct AuthIssued {
    Ticket ticket;
    crypto::MasterKey master;
    DispatchRecord dispatch;
    EndpointId endpoint;
};

struct AuthInvalid {
    std::size_t blacklist_rank = 0;
};

using AuthOutcome = std::variant<AuthIssued, AuthInvalid>;

struct TicketCounters {
    std::uint64_t issued = 0;
    std::uint64_t invalid = 0;
    std::uint64_t filter_notifications = 0;
    std::uint64_t director_registrations = 0;
    std::uint64_t renewal_requests = 0;
};

class TicketEngine {
public:
    TicketEngine(SivRegistry& siv, ServicePolicy policy, FilterRedirect& filter, EndpointDirector& director,
                 std::uint64_t key_seed);

    // On a registry hit: new client, ticket, director registration, filter
    // notification. On a miss: blacklist the signature and ask for renewal.
    AuthOutcome authenticate(const Signature& sig, SourceAddr src, Tick now);

    [[nodiscard]] const TicketCounters& counters() const noexcept { return counters_; }
    [[nodiscard]] const ServicePolicy& policy() const noexcept { return policy_; }

private:
    SivRegistry& siv_;
    ServicePolicy policy_;
    FilterRedirect& filter_;
    EndpointDirector& director_;
    std::uint64_t key_seed_;
    std::uint64_t next_client_ = 1;
    TicketCounters counters_;
};

}  // namespace stampgate
