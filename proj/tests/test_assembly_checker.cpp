#include <algorithm>
#include <string>

#include "doctest.h"
#include "stampgate/assembly_checker.hpp"
#include "stampgate/crypto_kit.hpp"
#include "stampgate/error.hpp"

using namespace stampgate;

namespace {

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

const ClientId kClient{kClientIdTag | 1};

}  // namespace

TEST_CASE("fragments are joined in seq order") {
    AssemblyChecker a;
    a.open_plan(1, kClient, {3, 3, 2});
    CHECK(a.ingest(1, 2, text("gh")).status == IngestStatus::Buffered);
    CHECK(a.ingest(1, 0, text("abc")).status == IngestStatus::Buffered);
    const auto done = a.ingest(1, 1, text("def"));
    REQUIRE(done.status == IngestStatus::Completed);
    CHECK(done.assembled == text("abcdefgh"));
    CHECK(a.check_and_deliver(1, done.assembled, 9).clean);
    REQUIRE(a.deliveries().size() == 1);
    CHECK(a.deliveries()[0].size == 8);
    CHECK(a.deliveries()[0].at == 9);
    CHECK(a.deliveries()[0].digest == crypto::digest(text("abcdefgh")));
}

TEST_CASE("fragments that disagree with the plan overflow") {
    AssemblyChecker a;
    a.open_plan(1, kClient, {3});
    auto code_of = [&](std::uint32_t seq, std::string_view payload) {
        try {
            a.ingest(1, seq, text(payload));
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };
    CHECK(code_of(0, "abcd") == Errc::OverflowFragment);
    CHECK(code_of(1, "abc") == Errc::OverflowFragment);
    try {
        a.ingest(5, 0, text("x"));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownPlan);
    }
}

TEST_CASE("a matching rule blocks delivery") {
    AssemblyChecker a({ScanRule{"bad", text("EVIL")}});
    a.open_plan(1, kClient, {8});
    const auto done = a.ingest(1, 0, text("xxEVILxx"));
    const auto verdict = a.check_and_deliver(1, done.assembled, 0);
    CHECK_FALSE(verdict.clean);
    CHECK(verdict.rule_id == "bad");
    CHECK(a.deliveries().empty());
}

TEST_CASE("no rules means everything is clean") {
    CHECK(scan(text("anything at all"), {}).clean);
    CHECK(scan(text("x"), {ScanRule{"empty", {}}}).clean);
}

TEST_CASE("a marker split across fragments is still found") {
    AssemblyChecker a({ScanRule{"m", text("MARKER")}});
    a.open_plan(1, kClient, {4, 4});
    a.ingest(1, 0, text("_MAR"));
    const auto done = a.ingest(1, 1, text("KER_"));
    CHECK_FALSE(a.check_and_deliver(1, done.assembled, 0).clean);
}

TEST_CASE("a plan is delivered at most once") {
    AssemblyChecker a;
    a.open_plan(1, kClient, {2});
    const auto done = a.ingest(1, 0, text("ok"));
    a.check_and_deliver(1, done.assembled, 0);
    CHECK_THROWS_AS(a.check_and_deliver(1, done.assembled, 0), Error);
    a.open_plan(1, kClient, {2});
    const auto again = a.ingest(1, 0, text("ok"));
    a.check_and_deliver(1, again.assembled, 1);
    CHECK(a.deliveries().size() == 1);
}

TEST_CASE("every arrival order of four fragments gives the same content") {
    const std::vector<std::string> parts{"alpha", "beta", "gamma", "de"};
    std::vector<std::uint32_t> order{0, 1, 2, 3};
    int perms = 0;
    do {
        AssemblyChecker a;
        a.open_plan(7, kClient, {5, 4, 5, 2});
        IngestOutcome last;
        for (auto k : order) last = a.ingest(7, k, text(parts[k]));
        REQUIRE(last.status == IngestStatus::Completed);
        CHECK(last.assembled == text("alphabetagammade"));
        ++perms;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(perms == 24);
}

TEST_CASE("dropping a client discards its buffers") {
    AssemblyChecker a;
    a.open_plan(1, kClient, {2, 2});
    a.ingest(1, 0, text("ab"));
    a.drop_client(kClient);
    CHECK_THROWS_AS(a.ingest(1, 1, text("cd")), Error);
}
