#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stampgate/core_model.hpp"
#include "stampgate/scenario.hpp"

namespace stampgate {

// mt19937_64 is specified bit-for-bit by the standard; the distributions are
// not, so bounded draws are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [0, 1) with 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    Bytes bytes(std::size_t n);

private:
    std::mt19937_64 engine_;
};

// splitmix64 over (seed, stream): independent seeds for every actor.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

enum class ActorClass { Honest, Attacker };

std::string_view to_string(ActorClass c) noexcept;

struct ClassStats {
    std::uint64_t injected = 0;
    std::uint64_t processed = 0;
    Units units = 0;
    Units header_units = 0;
    std::uint64_t expected = 0;    // ACC datagrams that matched an expectation
    std::uint64_t unexpected = 0;  // ACC datagrams dropped at the header
    std::map<std::string, std::uint64_t> outcomes;
};

// ACC-channel attacker traffic, the population the endpoint-scaling and
// stamp-savings formulas talk about.
struct AccAttackStats {
    std::uint64_t processed = 0;
    std::uint64_t expected = 0;
    std::uint64_t drops = 0;
    Units units = 0;
    Units post_header_units = 0;
    // Copies of a live header sent to a uniformly drawn endpoint (replayed or
    // source-spoofed with uniform_destination). Only these are blind endpoint
    // guesses; forged headers and same-endpoint copies are not.
    std::uint64_t guessed = 0;
    std::uint64_t guessed_expected = 0;
    Units guessed_post_header_units = 0;
};

struct TransferStats {
    std::uint64_t requested = 0;  // transfers honest clients started
    std::uint64_t planned = 0;    // plans received by honest clients
    std::uint64_t delivered = 0;  // deliveries matching an honest transfer
    std::uint64_t digest_ok = 0;
    std::uint64_t duplicate_deliveries = 0;
};

struct TickSample {
    Tick tick = 0;
    Units units = 0;
    std::uint64_t processed = 0;
    std::uint64_t processed_honest = 0;
    std::uint64_t queue_depth = 0;
};

struct GateRow {
    std::uint64_t c = 0;
    std::uint64_t n = 0;
    Tick duration = 0;
    std::uint64_t times = 0;
};

struct SimEvent {
    Tick tick = 0;
    std::string kind;
    std::string detail;
};

struct TraceRow {
    Tick tick = 0;
    ActorClass cls = ActorClass::Honest;
    std::uint32_t actor = 0;
    std::string outcome;
};

struct SimReport {
    Scenario scenario;
    std::uint64_t capacity = 0;  // floor(s / p)
    ClassStats honest;
    ClassStats attacker;
    std::map<std::string, ClassStats> by_model;
    std::map<std::string, std::uint64_t> outcomes;
    AccAttackStats acc_attack;
    TransferStats transfers;
    std::uint64_t terminations = 0;
    std::uint64_t honest_terminations = 0;
    std::uint64_t siv_calls = 0;
    std::uint64_t open_calls = 0;
    std::uint64_t tickets_issued = 0;
    std::uint64_t stamps_issued = 0;
    std::uint64_t blacklist_size = 0;
    Units total_units = 0;       // units consumed inside the run's ticks
    Units carried_over = 0;      // work started but not finished at the end
    std::uint64_t peak_processed = 0;
    std::vector<GateRow> gate;
    std::vector<TickSample> series;
    std::vector<std::string> violations;
    std::vector<SimEvent> events;
    bool events_truncated = false;
    std::vector<TraceRow> trace;
};

// Runs the scenario to completion. Throws Error(ConfigInvalid) listing every
// invariant the scenario breaks.
SimReport simulate(const Scenario& sc);

}  // namespace stampgate
