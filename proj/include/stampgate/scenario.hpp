#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "stampgate/assembly_checker.hpp"
#include "stampgate/core_model.hpp"
#include "stampgate/cost_table.hpp"

namespace stampgate {

enum class AttackerModel {
    FloodFixedSource,
    FloodRotatingSource,
    MaliciousMutator,
    Replayer,
    Spoofer,
};

std::string_view to_string(AttackerModel m) noexcept;

enum class Channel { Ca, Acc };

// What a CA-channel flood puts in its requests.
enum class FloodPayload { Initial, InvalidSignature, Malformed };

struct HonestGroup {
    std::uint32_t count = 1;
    Tick start = 0;
    Tick stagger = 0;  // start offset between consecutive clients of the group
    std::uint64_t transfer_size = 2500;
    std::uint32_t transfers = 1;
    Tick think_time = 0;
    ServiceCategory service = ServiceCategory::Message;
    std::uint16_t issuer = 1;
    std::uint32_t packets_per_tick = 1;
    // Ticks to wait for a reply before re-sending the last request.
    Tick retry_after = 50;
    // Empty means seeded random bytes; otherwise the text is repeated to size.
    std::string content;
};

struct AttackerSpec {
    AttackerModel model = AttackerModel::FloodFixedSource;
    std::uint32_t count = 1;
    double rate = 1.0;  // datagrams per tick per attacker
    Tick start = 0;
    Tick stop = std::numeric_limits<Tick>::max();
    Channel channel = Channel::Ca;  // floods only
    FloodPayload payload = FloodPayload::Initial;
    std::uint32_t signature_pool = 8;
    // Capture-based models send to a uniformly drawn endpoint instead of the
    // one the captured datagram used.
    bool uniform_destination = false;
};

struct EngineParams {
    std::size_t check_depth = 64;
    Tick t_fixed = 10;
    std::uint32_t payload_cap = 1024;
    Tick max_age = 500;
    Tick ticket_lifetime = 10'000;
    Units p = 12;  // processes per client request; n = floor(s / p)
    bool force_full_check = false;
};

struct PolicyRow {
    std::uint16_t issuer = 1;
    std::vector<ServiceCategory> services;
};

struct Scenario {
    std::uint64_t seed = 1;
    std::uint16_t endpoints = 4;
    Units units_per_tick = 1200;
    Tick duration = 1000;
    std::size_t queue_limit = 100'000;
    bool trace = false;
    CostTable costs;
    EngineParams engine;
    std::vector<PolicyRow> policies;
    ScanRuleSet scan_rules;
    std::vector<HonestGroup> honest;
    std::vector<AttackerSpec> attackers;
};

// Parses the JSON scenario format. Throws Error(ConfigInvalid) with the
// offending field path (or line/column for syntax errors).
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario_file(const std::string& path);

// One diagnostic per violated invariant; empty means runnable.
std::vector<std::string> validate_scenario(const Scenario& sc);

std::string scenario_to_json(const Scenario& sc);

}  // namespace stampgate
