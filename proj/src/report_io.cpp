#include "stampgate/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "stampgate/error.hpp"

namespace stampgate {

using nlohmann::ordered_json;

namespace {

ordered_json stats_json(const ClassStats& s) {
    ordered_json j;
    j["injected"] = s.injected;
    j["processed"] = s.processed;
    j["units"] = s.units;
    j["header_units"] = s.header_units;
    j["expected"] = s.expected;
    j["unexpected"] = s.unexpected;
    j["outcomes"] = s.outcomes;
    return j;
}

}  // namespace

std::string report_to_json(const SimReport& r, const ComparisonTable* comparison) {
    ordered_json j;
    j["scenario"] = nlohmann::json::parse(scenario_to_json(r.scenario));
    j["capacity_n"] = r.capacity;
    j["total_units"] = r.total_units;
    j["carried_over"] = r.carried_over;
    j["peak_processed"] = r.peak_processed;
    j["outcomes"] = r.outcomes;
    j["honest"] = stats_json(r.honest);
    j["attacker"] = stats_json(r.attacker);
    ordered_json models = ordered_json::object();
    for (const auto& [name, s] : r.by_model) models[name] = stats_json(s);
    j["by_model"] = models;
    j["acc_attack"] = {{"processed", r.acc_attack.processed},
                       {"expected", r.acc_attack.expected},
                       {"drops", r.acc_attack.drops},
                       {"units", r.acc_attack.units},
                       {"post_header_units", r.acc_attack.post_header_units},
                       {"guessed", r.acc_attack.guessed},
                       {"guessed_expected", r.acc_attack.guessed_expected},
                       {"guessed_post_header_units", r.acc_attack.guessed_post_header_units}};
    j["transfers"] = {{"requested", r.transfers.requested},
                      {"planned", r.transfers.planned},
                      {"delivered", r.transfers.delivered},
                      {"digest_ok", r.transfers.digest_ok},
                      {"duplicate_deliveries", r.transfers.duplicate_deliveries}};
    j["terminations"] = r.terminations;
    j["honest_terminations"] = r.honest_terminations;
    j["siv_calls"] = r.siv_calls;
    j["open_calls"] = r.open_calls;
    j["tickets_issued"] = r.tickets_issued;
    j["stamps_issued"] = r.stamps_issued;
    j["blacklist_size"] = r.blacklist_size;
    ordered_json gate = ordered_json::array();
    for (const auto& g : r.gate) {
        gate.push_back({{"c", g.c}, {"n", g.n}, {"duration", g.duration}, {"times", g.times}});
    }
    j["gate"] = gate;
    j["violations"] = r.violations;
    ordered_json events = ordered_json::array();
    for (const auto& e : r.events) events.push_back({{"tick", e.tick}, {"kind", e.kind}, {"detail", e.detail}});
    j["events"] = events;
    j["events_truncated"] = r.events_truncated;
    if (r.scenario.trace) {
        ordered_json trace = ordered_json::array();
        for (const auto& t : r.trace) {
            trace.push_back(ordered_json::array({t.tick, to_string(t.cls), t.actor, t.outcome}));
        }
        j["trace"] = trace;
    }
    if (comparison) j["comparison"] = nlohmann::json::parse(comparison->to_json());
    return j.dump(2) + "\n";
}

std::string series_to_csv(const SimReport& r) {
    std::string out = "tick,units,processed,processed_honest,queue_depth\n";
    for (const auto& t : r.series) {
        out += std::to_string(t.tick) + ',' + std::to_string(t.units) + ',' + std::to_string(t.processed) + ',' +
               std::to_string(t.processed_honest) + ',' + std::to_string(t.queue_depth) + '\n';
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& target, std::string_view contents) {
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::InvalidArgument, "cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) throw Error(Errc::InvalidArgument, "short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error(Errc::InvalidArgument, "cannot rename onto " + target.string() + ": " + ec.message());
    }
}

}  // namespace stampgate
