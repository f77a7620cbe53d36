#include "stampgate/assembly_checker.hpp"

#include <algorithm>

#include "stampgate/crypto_kit.hpp"
#include "stampgate/error.hpp"

namespace stampgate {

ScanOutcome scan(ByteView assembled, const ScanRuleSet& rules) {
    for (const auto& rule : rules) {
        if (rule.pattern.empty()) continue;
        auto hit = std::search(assembled.begin(), assembled.end(), rule.pattern.begin(), rule.pattern.end());
        if (hit != assembled.end()) return ScanOutcome{false, rule.id};
    }
    return ScanOutcome{};
}

void AssemblyChecker::open_plan(std::uint64_t plan_id, ClientId client,
                                std::vector<std::uint32_t> fragment_lengths) {
    buffers_[plan_id] = Buffer{client, std::move(fragment_lengths), {}};
}

IngestOutcome AssemblyChecker::ingest(std::uint64_t plan_id, std::uint32_t seq, ByteView payload) {
    auto it = buffers_.find(plan_id);
    if (it == buffers_.end()) throw Error(Errc::UnknownPlan, "no buffer for plan");
    auto& buf = it->second;
    if (seq >= buf.lengths.size()) throw Error(Errc::OverflowFragment, "seq beyond plan");
    if (payload.size() != buf.lengths[seq]) {
        throw Error(Errc::OverflowFragment, "fragment length disagrees with planned payload_len");
    }
    buf.fragments.emplace(seq, Bytes(payload.begin(), payload.end()));
    if (buf.fragments.size() < buf.lengths.size()) return IngestOutcome{};

    IngestOutcome out;
    out.status = IngestStatus::Completed;
    for (const auto& [_, fragment] : buf.fragments) {
        out.assembled.insert(out.assembled.end(), fragment.begin(), fragment.end());
    }
    return out;
}

ScanOutcome AssemblyChecker::check_and_deliver(std::uint64_t plan_id, const Bytes& assembled, Tick now) {
    auto it = buffers_.find(plan_id);
    if (it == buffers_.end()) throw Error(Errc::UnknownPlan, "no buffer for plan");
    const auto client = it->second.client;
    buffers_.erase(it);

    auto result = scan(assembled, rules_);
    if (result.clean && delivered_.insert(plan_id).second) {
        sink_.push_back(Delivery{plan_id, client, assembled.size(), crypto::digest(assembled), now});
    }
    return result;
}

void AssemblyChecker::drop_client(ClientId client) {
    std::erase_if(buffers_, [client](const auto& kv) { return kv.second.client == client; });
}

}  // namespace stampgate
