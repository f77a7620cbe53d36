#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stampgate/core_model.hpp"

namespace stampgate {

// Antivirus stand-in: a rule matches when its byte pattern occurs anywhere
// in the assembled content.
struct ScanRule {
    std::string id;
    Bytes pattern;
};
using ScanRuleSet = std::vector<ScanRule>;

struct ScanOutcome {
    bool clean = true;
    std::string rule_id;  // first matching rule when !clean
};

ScanOutcome scan(ByteView assembled, const ScanRuleSet& rules);

enum class IngestStatus { Buffered, Completed };

struct IngestOutcome {
    IngestStatus status = IngestStatus::Buffered;
    Bytes assembled;  // set when Completed
};

struct Delivery {
    std::uint64_t plan_id = 0;
    ClientId client;
    std::uint64_t size = 0;
    Digest digest{};
    Tick at = 0;
};

// Buffers verified fragments per plan, reassembles in seq order and hands
// clean content to the server sink exactly once per plan.
class AssemblyChecker {
public:
    explicit AssemblyChecker(ScanRuleSet rules = {}) : rules_(std::move(rules)) {}

    void open_plan(std::uint64_t plan_id, ClientId client, std::vector<std::uint32_t> fragment_lengths);

    // Throws Error(UnknownPlan) or Error(OverflowFragment).
    IngestOutcome ingest(std::uint64_t plan_id, std::uint32_t seq, ByteView payload);

    // Scans completed content; a clean result is appended to the sink.
    ScanOutcome check_and_deliver(std::uint64_t plan_id, const Bytes& assembled, Tick now);

    void drop_client(ClientId client);

    [[nodiscard]] const std::vector<Delivery>& deliveries() const noexcept { return sink_; }
    [[nodiscard]] const ScanRuleSet& rules() const noexcept { return rules_; }

private:
    struct Buffer {
        ClientId client;
        std::vector<std::uint32_t> lengths;
        std::map<std::uint32_t, Bytes> fragments;
    };

    ScanRuleSet rules_;
    std::map<std::uint64_t, Buffer> buffers_;
    std::set<std::uint64_t> delivered_;
    std::vector<Delivery> sink_;
};

}  // namespace stampgate
