#include <numeric>

#include "doctest.h"
#include "stampgate/error.hpp"
#include "stampgate/netsim.hpp"
#include "stampgate/report_io.hpp"

using namespace stampgate;

namespace {

Scenario honest_only(std::uint32_t clients = 4) {
    Scenario sc;
    sc.seed = 5;
    sc.duration = 300;
    HonestGroup g;
    g.count = clients;
    g.stagger = 2;
    g.transfer_size = 2500;
    g.transfers = 2;
    g.think_time = 3;
    sc.honest.push_back(g);
    return sc;
}

std::uint64_t outcome_sum(const ClassStats& s) {
    return std::accumulate(s.outcomes.begin(), s.outcomes.end(), std::uint64_t{0},
                           [](std::uint64_t a, const auto& kv) { return a + kv.second; });
}

void check_conservation(const SimReport& r) {
    CHECK(outcome_sum(r.honest) == r.honest.injected);
    CHECK(outcome_sum(r.attacker) == r.attacker.injected);
    for (const auto& [model, stats] : r.by_model) {
        CAPTURE(model);
        CHECK(outcome_sum(stats) == stats.injected);
    }
}

}  // namespace

TEST_CASE("honest clients alone deliver every transfer") {
    const auto r = simulate(honest_only());
    CHECK(r.violations.empty());
    CHECK(r.transfers.requested == 8);
    CHECK(r.transfers.delivered == 8);
    CHECK(r.transfers.digest_ok == 8);
    CHECK(r.transfers.duplicate_deliveries == 0);
    CHECK(r.attacker.injected == 0);
    CHECK(r.terminations == 0);
    CHECK(r.tickets_issued == 4);
    CHECK(r.capacity == 100);
    check_conservation(r);
}

TEST_CASE("same scenario, same bytes") {
    auto sc = honest_only();
    AttackerSpec flood;
    flood.model = AttackerModel::FloodRotatingSource;
    flood.rate = 7.5;
    flood.channel = Channel::Acc;
    sc.attackers.push_back(flood);
    AttackerSpec replay;
    replay.model = AttackerModel::Replayer;
    replay.rate = 2;
    replay.uniform_destination = true;
    sc.attackers.push_back(replay);
    const auto a = report_to_json(simulate(sc));
    const auto b = report_to_json(simulate(sc));
    CHECK(a == b);
    sc.seed = 6;
    CHECK(report_to_json(simulate(sc)) != a);
}

TEST_CASE("fixed-source flood gets one request through per block window") {
    // n = 1200 / 600 = 2. Two honest sessions are live before the flood, so
    // every gate is set with c = n and lasts t_fixed = 10 ticks.
    Scenario sc = honest_only(2);
    sc.engine.p = 600;
    sc.trace = true;
    sc.duration = 300;
    AttackerSpec flood;
    flood.model = AttackerModel::FloodFixedSource;
    flood.rate = 1;
    flood.start = 50;
    flood.stop = 250;
    sc.attackers.push_back(flood);
    const auto r = simulate(sc);
    REQUIRE(r.violations.empty());
    REQUIRE(r.tickets_issued == 2);
    std::vector<Tick> accepted;
    std::uint64_t limited = 0;
    for (const auto& row : r.trace) {
        if (row.cls != ActorClass::Attacker) continue;
        if (row.outcome == "ReplyPublicKey") accepted.push_back(row.tick);
        if (row.outcome == "DropRateLimited") ++limited;
    }
    REQUIRE(accepted.size() == 20);
    for (std::size_t i = 0; i < accepted.size(); ++i) CHECK(accepted[i] == 50 + 10 * i);
    CHECK(limited == 180);
    bool saw_full_gate = false;
    for (const auto& g : r.gate) {
        if (g.c == 2 && g.n == 2) {
            saw_full_gate = true;
            CHECK(g.duration == 10);
        }
    }
    CHECK(saw_full_gate);
}

TEST_CASE("budget is never exceeded and outcomes add up") {
    auto sc = honest_only();
    sc.units_per_tick = 300;
    sc.engine.p = 30;
    sc.queue_limit = 500;
    AttackerSpec junk;
    junk.model = AttackerModel::FloodRotatingSource;
    junk.rate = 400;
    junk.payload = FloodPayload::Malformed;
    junk.start = 20;
    junk.stop = 150;
    sc.attackers.push_back(junk);
    const auto r = simulate(sc);
    CHECK(r.violations.empty());
    for (const auto& t : r.series) REQUIRE(t.units <= sc.units_per_tick);
    CHECK(r.total_units <= sc.units_per_tick * sc.duration);
    CHECK(r.outcomes.contains("DropQueueFull"));
    check_conservation(r);
    CHECK(r.transfers.delivered == r.transfers.requested);
}

TEST_CASE("10^4 mutated datagrams corrupt nothing") {
    auto sc = honest_only(8);
    sc.duration = 500;
    sc.honest[0].transfers = 12;
    sc.honest[0].transfer_size = 6000;
    AttackerSpec mut;
    mut.model = AttackerModel::MaliciousMutator;
    mut.rate = 25;
    mut.start = 20;
    mut.stop = 420;
    sc.attackers.push_back(mut);
    const auto r = simulate(sc);
    CHECK(r.violations.empty());
    CHECK(r.by_model.at("MALICIOUS_MUTATOR").injected >= 10'000);
    CHECK(r.transfers.duplicate_deliveries == 0);
    CHECK(r.transfers.digest_ok == r.transfers.delivered);
    CHECK(r.transfers.delivered > 0);
    check_conservation(r);
}

TEST_CASE("an invalid scenario is refused") {
    auto sc = honest_only();
    sc.endpoints = 0;
    CHECK_THROWS_AS(simulate(sc), Error);
}

TEST_CASE("stream seeds differ per stream and per seed") {
    CHECK(stream_seed(1, 1) != stream_seed(1, 2));
    CHECK(stream_seed(1, 1) != stream_seed(2, 1));
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) REQUIRE(rng.below(7) < 7);
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
