#include "stampgate/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "stampgate/error.hpp"

namespace stampgate {

using nlohmann::json;

std::string_view to_string(AttackerModel m) noexcept {
    switch (m) {
        case AttackerModel::FloodFixedSource: return "FLOOD_FIXED_SOURCE";
        case AttackerModel::FloodRotatingSource: return "FLOOD_ROTATING_SOURCE";
        case AttackerModel::MaliciousMutator: return "MALICIOUS_MUTATOR";
        case AttackerModel::Replayer: return "REPLAYER";
        case AttackerModel::Spoofer: return "SPOOFER";
    }
    return "UNKNOWN";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw Error(Errc::ConfigInvalid, "field \"" + path + "\": " + why);
}

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) fail(join(path, key), "unknown field");
    }
}

std::uint64_t get_uint(const json& obj, std::string_view key, const std::string& path, std::uint64_t def,
                       std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
    auto it = obj.find(std::string(key));
    if (it == obj.end()) return def;
    const auto field = join(path, key);
    if (it->is_number_unsigned()) {
        const auto v = it->get<std::uint64_t>();
        if (v > max) fail(field, "value " + std::to_string(v) + " exceeds " + std::to_string(max));
        return v;
    }
    if (it->is_number_integer()) fail(field, "must be non-negative");
    fail(field, "expected a non-negative integer");
}

double get_number(const json& obj, std::string_view key, const std::string& path, double def) {
    auto it = obj.find(std::string(key));
    if (it == obj.end()) return def;
    if (!it->is_number()) fail(join(path, key), "expected a number");
    return it->get<double>();
}

bool get_bool(const json& obj, std::string_view key, const std::string& path, bool def) {
    auto it = obj.find(std::string(key));
    if (it == obj.end()) return def;
    if (!it->is_boolean()) fail(join(path, key), "expected true or false");
    return it->get<bool>();
}

std::string get_string(const json& obj, std::string_view key, const std::string& path, std::string def) {
    auto it = obj.find(std::string(key));
    if (it == obj.end()) return def;
    if (!it->is_string()) fail(join(path, key), "expected a string");
    return it->get<std::string>();
}

ServiceCategory service_of(const std::string& name, const std::string& path) {
    auto s = parse_service(name);
    if (!s) fail(path, "unknown service \"" + name + "\" (MESSAGE, FILE_UPLOAD, QUERY)");
    return *s;
}

AttackerModel model_of(const std::string& name, const std::string& path) {
    for (auto m : {AttackerModel::FloodFixedSource, AttackerModel::FloodRotatingSource,
                   AttackerModel::MaliciousMutator, AttackerModel::Replayer, AttackerModel::Spoofer}) {
        if (name == to_string(m)) return m;
    }
    fail(path, "unknown attacker model \"" + name + "\"");
}

CostTable parse_costs(const json& obj, const std::string& path) {
    check_keys(obj, path,
               {"header_inspect", "drop", "open_body", "stamp_check", "siv_validate", "blacklist_probe",
                "plan_packet", "scan_kb", "key_reply"});
    CostTable c;
    c.header_inspect = get_uint(obj, "header_inspect", path, c.header_inspect);
    c.drop = get_uint(obj, "drop", path, c.drop);
    c.open_body = get_uint(obj, "open_body", path, c.open_body);
    c.stamp_check = get_uint(obj, "stamp_check", path, c.stamp_check);
    c.siv_validate = get_uint(obj, "siv_validate", path, c.siv_validate);
    c.blacklist_probe = get_uint(obj, "blacklist_probe", path, c.blacklist_probe);
    c.plan_packet = get_uint(obj, "plan_packet", path, c.plan_packet);
    c.scan_kb = get_uint(obj, "scan_kb", path, c.scan_kb);
    c.key_reply = get_uint(obj, "key_reply", path, c.key_reply);
    return c;
}

EngineParams parse_engine(const json& obj, const std::string& path) {
    check_keys(obj, path,
               {"B", "t_fixed", "payload_cap", "max_age", "ticket_lifetime", "p", "force_full_check"});
    EngineParams e;
    e.check_depth = get_uint(obj, "B", path, e.check_depth);
    e.t_fixed = get_uint(obj, "t_fixed", path, e.t_fixed);
    e.payload_cap = static_cast<std::uint32_t>(get_uint(obj, "payload_cap", path, e.payload_cap, UINT32_MAX));
    e.max_age = get_uint(obj, "max_age", path, e.max_age);
    e.ticket_lifetime = get_uint(obj, "ticket_lifetime", path, e.ticket_lifetime);
    e.p = get_uint(obj, "p", path, e.p);
    e.force_full_check = get_bool(obj, "force_full_check", path, e.force_full_check);
    return e;
}

HonestGroup parse_honest(const json& obj, const std::string& path) {
    check_keys(obj, path,
               {"count", "start", "stagger", "transfer_size", "transfers", "think_time", "service", "issuer",
                "packets_per_tick", "retry_after", "content"});
    HonestGroup g;
    g.count = static_cast<std::uint32_t>(get_uint(obj, "count", path, g.count, UINT32_MAX));
    g.start = get_uint(obj, "start", path, g.start);
    g.stagger = get_uint(obj, "stagger", path, g.stagger);
    g.transfer_size = get_uint(obj, "transfer_size", path, g.transfer_size);
    g.transfers = static_cast<std::uint32_t>(get_uint(obj, "transfers", path, g.transfers, UINT32_MAX));
    g.think_time = get_uint(obj, "think_time", path, g.think_time);
    g.service = service_of(get_string(obj, "service", path, "MESSAGE"), join(path, "service"));
    g.issuer = static_cast<std::uint16_t>(get_uint(obj, "issuer", path, g.issuer, 0xffff));
    g.packets_per_tick =
        static_cast<std::uint32_t>(get_uint(obj, "packets_per_tick", path, g.packets_per_tick, UINT32_MAX));
    g.retry_after = get_uint(obj, "retry_after", path, g.retry_after);
    g.content = get_string(obj, "content", path, "");
    return g;
}

AttackerSpec parse_attacker(const json& obj, const std::string& path) {
    check_keys(obj, path,
               {"model", "count", "rate", "start", "stop", "channel", "payload", "signature_pool",
                "uniform_destination"});
    AttackerSpec a;
    if (!obj.contains("model")) fail(join(path, "model"), "required");
    a.model = model_of(get_string(obj, "model", path, ""), join(path, "model"));
    a.count = static_cast<std::uint32_t>(get_uint(obj, "count", path, a.count, UINT32_MAX));
    a.rate = get_number(obj, "rate", path, a.rate);
    a.start = get_uint(obj, "start", path, a.start);
    a.stop = get_uint(obj, "stop", path, a.stop);
    const auto channel = get_string(obj, "channel", path, "ca");
    if (channel == "ca") {
        a.channel = Channel::Ca;
    } else if (channel == "acc") {
        a.channel = Channel::Acc;
    } else {
        fail(join(path, "channel"), "expected \"ca\" or \"acc\"");
    }
    const auto payload = get_string(obj, "payload", path, "initial");
    if (payload == "initial") {
        a.payload = FloodPayload::Initial;
    } else if (payload == "invalid_signature") {
        a.payload = FloodPayload::InvalidSignature;
    } else if (payload == "malformed") {
        a.payload = FloodPayload::Malformed;
    } else {
        fail(join(path, "payload"), "expected \"initial\", \"invalid_signature\" or \"malformed\"");
    }
    a.signature_pool = static_cast<std::uint32_t>(get_uint(obj, "signature_pool", path, a.signature_pool, UINT32_MAX));
    a.uniform_destination = get_bool(obj, "uniform_destination", path, a.uniform_destination);
    return a;
}

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw Error(Errc::ConfigInvalid, "JSON syntax error at " + line_col(json_text, e.byte) + ": " + e.what());
    }
    check_keys(root, "",
               {"seed", "I", "s", "duration", "queue_limit", "trace", "costs", "engine", "policies",
                "scan_rules", "honest", "attackers"});
    Scenario sc;
    sc.seed = get_uint(root, "seed", "", sc.seed);
    sc.endpoints = static_cast<std::uint16_t>(get_uint(root, "I", "", sc.endpoints, 0xffff));
    sc.units_per_tick = get_uint(root, "s", "", sc.units_per_tick);
    sc.duration = get_uint(root, "duration", "", sc.duration);
    sc.queue_limit = get_uint(root, "queue_limit", "", sc.queue_limit);
    sc.trace = get_bool(root, "trace", "", sc.trace);
    if (root.contains("costs")) sc.costs = parse_costs(root["costs"], "costs");
    if (root.contains("engine")) sc.engine = parse_engine(root["engine"], "engine");

    auto array_of = [&](const char* key) -> const json* {
        if (!root.contains(key)) return nullptr;
        if (!root[key].is_array()) fail(key, "expected an array");
        return &root[key];
    };
    if (const auto* rows = array_of("policies")) {
        for (std::size_t i = 0; i < rows->size(); ++i) {
            const auto path = "policies[" + std::to_string(i) + "]";
            const auto& row = (*rows)[i];
            check_keys(row, path, {"issuer", "services"});
            PolicyRow p;
            p.issuer = static_cast<std::uint16_t>(get_uint(row, "issuer", path, p.issuer, 0xffff));
            if (!row.contains("services") || !row["services"].is_array()) {
                fail(join(path, "services"), "expected an array of service names");
            }
            for (const auto& s : row["services"]) {
                if (!s.is_string()) fail(join(path, "services"), "expected service names");
                p.services.push_back(service_of(s.get<std::string>(), join(path, "services")));
            }
            sc.policies.push_back(std::move(p));
        }
    }
    if (const auto* rows = array_of("scan_rules")) {
        for (std::size_t i = 0; i < rows->size(); ++i) {
            const auto path = "scan_rules[" + std::to_string(i) + "]";
            const auto& row = (*rows)[i];
            check_keys(row, path, {"id", "pattern"});
            ScanRule rule;
            rule.id = get_string(row, "id", path, "rule" + std::to_string(i));
            const auto pattern = get_string(row, "pattern", path, "");
            rule.pattern.assign(pattern.begin(), pattern.end());
            sc.scan_rules.push_back(std::move(rule));
        }
    }
    if (const auto* rows = array_of("honest")) {
        for (std::size_t i = 0; i < rows->size(); ++i) {
            sc.honest.push_back(parse_honest((*rows)[i], "honest[" + std::to_string(i) + "]"));
        }
    }
    if (const auto* rows = array_of("attackers")) {
        for (std::size_t i = 0; i < rows->size(); ++i) {
            sc.attackers.push_back(parse_attacker((*rows)[i], "attackers[" + std::to_string(i) + "]"));
        }
    }
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ConfigInvalid, "cannot open scenario file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::vector<std::string> validate_scenario(const Scenario& sc) {
    std::vector<std::string> out;
    auto bad = [&](const std::string& field, const std::string& why) {
        out.push_back("field \"" + field + "\": " + why);
    };
    if (sc.endpoints < 1) bad("I", "must be >= 1");
    if (sc.units_per_tick == 0) bad("s", "must be > 0");
    if (sc.duration == 0) bad("duration", "must be > 0");
    if (sc.queue_limit == 0) bad("queue_limit", "must be > 0");
    for (const auto& v : sc.costs.violations()) out.push_back(v);
    if (sc.engine.p == 0) bad("engine.p", "must be > 0");
    if (sc.engine.p > sc.units_per_tick) bad("engine.p", "must not exceed s (capacity n would be 0)");
    if (sc.engine.payload_cap == 0) bad("engine.payload_cap", "must be > 0");
    if (sc.engine.max_age == 0) bad("engine.max_age", "must be > 0");
    if (sc.engine.ticket_lifetime == 0) bad("engine.ticket_lifetime", "must be > 0");

    for (std::size_t i = 0; i < sc.policies.size(); ++i) {
        if (sc.policies[i].services.empty()) {
            bad("policies[" + std::to_string(i) + "].services", "must not be empty");
        }
    }
    for (std::size_t i = 0; i < sc.honest.size(); ++i) {
        const auto& g = sc.honest[i];
        const auto path = "honest[" + std::to_string(i) + "]";
        if (g.transfer_size == 0) bad(path + ".transfer_size", "must be > 0");
        if (g.packets_per_tick == 0) bad(path + ".packets_per_tick", "must be > 0");
        if (g.retry_after == 0) bad(path + ".retry_after", "must be > 0");
        bool has_policy = sc.policies.empty() && g.issuer == 1;
        for (const auto& p : sc.policies) has_policy = has_policy || p.issuer == g.issuer;
        if (!has_policy) bad(path + ".issuer", "no policy row for issuer " + std::to_string(g.issuer));
    }
    for (std::size_t i = 0; i < sc.attackers.size(); ++i) {
        const auto& a = sc.attackers[i];
        const auto path = "attackers[" + std::to_string(i) + "]";
        if (!std::isfinite(a.rate) || a.rate < 0) bad(path + ".rate", "must be a finite number >= 0");
        if (a.stop < a.start) bad(path + ".stop", "must be >= start");
        if (a.payload == FloodPayload::InvalidSignature && a.signature_pool == 0) {
            bad(path + ".signature_pool", "must be > 0");
        }
    }
    return out;
}

std::string scenario_to_json(const Scenario& sc) {
    json j;
    j["seed"] = sc.seed;
    j["I"] = sc.endpoints;
    j["s"] = sc.units_per_tick;
    j["duration"] = sc.duration;
    j["queue_limit"] = sc.queue_limit;
    j["trace"] = sc.trace;
    const auto& c = sc.costs;
    j["costs"] = {{"header_inspect", c.header_inspect}, {"drop", c.drop},
                  {"open_body", c.open_body},           {"stamp_check", c.stamp_check},
                  {"siv_validate", c.siv_validate},     {"blacklist_probe", c.blacklist_probe},
                  {"plan_packet", c.plan_packet},       {"scan_kb", c.scan_kb},
                  {"key_reply", c.key_reply}};
    const auto& e = sc.engine;
    j["engine"] = {{"B", e.check_depth},         {"t_fixed", e.t_fixed},
                   {"payload_cap", e.payload_cap}, {"max_age", e.max_age},
                   {"ticket_lifetime", e.ticket_lifetime}, {"p", e.p},
                   {"force_full_check", e.force_full_check}};
    j["policies"] = json::array();
    for (const auto& p : sc.policies) {
        json services = json::array();
        for (auto s : p.services) services.push_back(to_string(s));
        j["policies"].push_back({{"issuer", p.issuer}, {"services", services}});
    }
    j["scan_rules"] = json::array();
    for (const auto& r : sc.scan_rules) {
        j["scan_rules"].push_back({{"id", r.id}, {"pattern", std::string(r.pattern.begin(), r.pattern.end())}});
    }
    j["honest"] = json::array();
    for (const auto& g : sc.honest) {
        j["honest"].push_back({{"count", g.count},
                               {"start", g.start},
                               {"stagger", g.stagger},
                               {"transfer_size", g.transfer_size},
                               {"transfers", g.transfers},
                               {"think_time", g.think_time},
                               {"service", to_string(g.service)},
                               {"issuer", g.issuer},
                               {"packets_per_tick", g.packets_per_tick},
                               {"retry_after", g.retry_after},
                               {"content", g.content}});
    }
    j["attackers"] = json::array();
    for (const auto& a : sc.attackers) {
        const char* payload = a.payload == FloodPayload::Initial            ? "initial"
                              : a.payload == FloodPayload::InvalidSignature ? "invalid_signature"
                                                                            : "malformed";
        json row = {{"model", to_string(a.model)},
                    {"count", a.count},
                    {"rate", a.rate},
                    {"start", a.start},
                    {"channel", a.channel == Channel::Ca ? "ca" : "acc"},
                    {"payload", payload},
                    {"signature_pool", a.signature_pool},
                    {"uniform_destination", a.uniform_destination}};
        if (a.stop != std::numeric_limits<Tick>::max()) row["stop"] = a.stop;
        j["attackers"].push_back(std::move(row));
    }
    return j.dump(2);
}

}  // namespace stampgate
