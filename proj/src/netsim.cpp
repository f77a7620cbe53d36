#include "stampgate/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <set>

#include "stampgate/acc_codec.hpp"
#include "stampgate/error.hpp"
#include "stampgate/server.hpp"

namespace stampgate {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "Rng::below needs n > 0");
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - kMax % n;
    for (;;) {
        const auto x = next();
        if (x < limit) return x % n;
    }
}

Bytes Rng::bytes(std::size_t n) {
    Bytes out(n);
    for (std::size_t i = 0; i < n; i += 8) {
        auto word = next();
        for (std::size_t j = i; j < std::min(n, i + 8); ++j) {
            out[j] = static_cast<std::uint8_t>(word);
            word >>= 8;
        }
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(seed ^ splitmix64(stream));
}

std::string_view to_string(ActorClass c) noexcept { return c == ActorClass::Honest ? "honest" : "attacker"; }

namespace {

constexpr std::size_t kCaptureLimit = 4096;
constexpr std::size_t kEventLimit = 20'000;

// Seed streams. Actor streams are offset so adding an attacker never shifts
// an honest client's randomness.
constexpr std::uint64_t kServerKeyStream = 1;
constexpr std::uint64_t kStampKeyStream = 2;
constexpr std::uint64_t kPkiStream = 3;
constexpr std::uint64_t kHonestStream = 1'000;
constexpr std::uint64_t kAttackerStream = 1'000'000'000;

constexpr std::uint32_t kHonestBase = 0x0A00'0000;
constexpr std::uint32_t kFixedAttackerBase = 0xC000'0000;
constexpr std::uint32_t kRotatingAttackerBase = 0xE000'0000;
constexpr std::uint16_t kBogusIssuer = 0xFFFE;

struct Job {
    ActorClass cls = ActorClass::Honest;
    std::uint32_t actor = 0;
    std::string model;
    bool acc = false;
    SourceAddr src;
    Bytes raw;
    EndpointId endpoint;
    Packet packet;
    bool guessed = false;
};

struct Downlink {
    enum class Kind { PublicKey, Dispatch, ControlReply };
    Tick at = 0;
    Kind kind = Kind::PublicKey;
    std::uint32_t honest = 0;
    DispatchRecord dispatch;
    std::uint32_t seq = 0;
    Bytes sealed;
};

struct Captured {
    EndpointId endpoint;
    Packet packet;
};

enum class Phase { Waiting, AwaitKey, WaitSig, AwaitDispatch, RequestPlan, AwaitPlan, Sending, Done };

struct Honest {
    std::uint32_t index = 0;
    const HonestGroup* group = nullptr;
    Rng rng{0};
    SourceAddr src;
    Signature sig;
    crypto::MasterKey pki;

    Phase phase = Phase::Waiting;
    Tick wake = 0;
    Tick deadline = 0;

    bool authenticated = false;
    ClientId client;
    crypto::MasterKey master;
    EndpointId session_endpoint;
    std::uint32_t control_seq = 0;
    std::set<std::uint32_t> outstanding;

    std::uint32_t started = 0;
    Bytes content;
    Digest digest{};
    std::optional<acc::ClientPlan> plan;
    std::size_t next_entry = 0;
    std::uint64_t offset = 0;
};

struct Attacker {
    std::uint32_t index = 0;
    const AttackerSpec* spec = nullptr;
    Rng rng{0};
    SourceAddr fixed_src;
    double credit = 0.0;
    std::vector<Signature> pool;
};

struct PlanRecord {
    std::uint32_t honest = 0;
    Digest digest{};
    std::uint64_t deliveries = 0;
};

ServerConfig server_config(const Scenario& sc) {
    ServerConfig cfg;
    cfg.endpoints = sc.endpoints;
    cfg.units_per_tick = sc.units_per_tick;
    cfg.p = sc.engine.p;
    cfg.filter.check_depth = sc.engine.check_depth;
    cfg.filter.t_fixed = sc.engine.t_fixed;
    cfg.policy.ticket_lifetime = sc.engine.ticket_lifetime;
    if (sc.policies.empty()) {
        cfg.policy.by_issuer[1] = {ServiceCategory::Message, ServiceCategory::FileUpload, ServiceCategory::Query};
    }
    for (const auto& row : sc.policies) {
        for (auto s : row.services) cfg.policy.by_issuer[row.issuer].insert(s);
    }
    cfg.payload_cap = sc.engine.payload_cap;
    cfg.gateway.freshness.max_age = sc.engine.max_age;
    cfg.gateway.force_full_check = sc.engine.force_full_check;
    cfg.costs = sc.costs;
    cfg.scan_rules = sc.scan_rules;
    cfg.key_seed = stream_seed(sc.seed, kServerKeyStream);
    Rng key_rng(stream_seed(sc.seed, kStampKeyStream));
    const auto key = key_rng.bytes(cfg.stamp_key.bytes.size());
    std::copy(key.begin(), key.end(), cfg.stamp_key.bytes.begin());
    return cfg;
}

std::string ca_outcome_name(const CaResult& r) {
    if (r.filter.verdict != FilterVerdict::ForwardToTicketEngine) return std::string(to_string(r.filter.verdict));
    return std::holds_alternative<AuthIssued>(*r.auth) ? "Authenticated" : "AuthRejected";
}

class Simulation {
public:
    explicit Simulation(const Scenario& sc) : sc_(sc), server_(server_config(sc)) {
        report_.scenario = sc;
        report_.capacity = server_.capacity();
        setup_actors();
    }

    SimReport run();

private:
    void setup_actors();
    void deliver_downlinks(Tick now);
    void honest_act(Honest& h, Tick now);
    void attacker_act(Attacker& a, Tick now);
    std::optional<Job> attacker_datagram(Attacker& a);

    void start_transfer(Honest& h);
    void send_ca(Honest& h, Bytes raw);
    void send_transfer_request(Honest& h, Tick now);
    void send_data(Honest& h);

    void enqueue(Job job);
    Units process(const Job& job, Tick now);
    Units process_ca(const Job& job, Tick now);
    Units process_acc(const Job& job, Tick now);
    void record(const Job& job, const std::string& outcome, Units units, Units header_units,
                std::optional<bool> expected, Tick now, bool processed = true);
    void event(Tick now, std::string kind, std::string detail);
    void violation(std::string what) { report_.violations.push_back(std::move(what)); }
    void final_checks();

    const Scenario& sc_;
    Server server_;
    Tick now_ = 0;
    SimReport report_;
    std::vector<Honest> honest_;
    std::vector<Attacker> attackers_;
    std::map<SourceAddr, std::uint32_t> honest_by_src_;
    std::map<ClientId, std::uint32_t> honest_by_client_;
    std::map<std::uint64_t, PlanRecord> plan_records_;
    std::deque<Job> queue_;
    std::deque<Downlink> downlinks_;
    std::deque<Captured> capture_;
    // Earliest tick each source may next get past the gate.
    std::map<SourceAddr, Tick> gate_open_at_;
    std::optional<Units> max_unexpected_units_;
    std::optional<Units> min_forwarded_units_;
};

void Simulation::setup_actors() {
    std::uint32_t index = 0;
    for (const auto& group : sc_.honest) {
        for (std::uint32_t k = 0; k < group.count; ++k, ++index) {
            Honest h;
            h.index = index;
            h.group = &group;
            h.rng = Rng(stream_seed(sc_.seed, kHonestStream + index));
            h.src = SourceAddr{kHonestBase + index + 1};
            h.sig = make_signature(group.issuer, 1000 + index);
            h.pki = crypto::master_key_from_seed(stream_seed(sc_.seed, kPkiStream), index);
            h.wake = group.start + static_cast<Tick>(k) * group.stagger;
            server_.register_signature(h.sig, h.pki);
            honest_by_src_[h.src] = index;
            honest_.push_back(std::move(h));
        }
    }
    index = 0;
    for (const auto& spec : sc_.attackers) {
        for (std::uint32_t k = 0; k < spec.count; ++k, ++index) {
            Attacker a;
            a.index = index;
            a.spec = &spec;
            a.rng = Rng(stream_seed(sc_.seed, kAttackerStream + index));
            a.fixed_src = SourceAddr{kFixedAttackerBase + index + 1};
            if (spec.payload == FloodPayload::InvalidSignature) {
                for (std::uint32_t i = 0; i < spec.signature_pool; ++i) {
                    a.pool.push_back(make_signature(kBogusIssuer, a.rng.next() | (1ULL << 63)));
                }
            }
            attackers_.push_back(std::move(a));
        }
    }
}

void Simulation::event(Tick now, std::string kind, std::string detail) {
    if (report_.events.size() >= kEventLimit) {
        report_.events_truncated = true;
        return;
    }
    report_.events.push_back(SimEvent{now, std::move(kind), std::move(detail)});
}

void Simulation::enqueue(Job job) {
    auto& stats = job.cls == ActorClass::Honest ? report_.honest : report_.attacker;
    ++stats.injected;
    if (!job.model.empty()) ++report_.by_model[job.model].injected;
    if (queue_.size() >= sc_.queue_limit) {
        record(job, "DropQueueFull", 0, 0, std::nullopt, now_, false);
        return;
    }
    queue_.push_back(std::move(job));
}

void Simulation::record(const Job& job, const std::string& outcome, Units units, Units header_units,
                        std::optional<bool> expected, Tick now, bool processed) {
    auto apply = [&](ClassStats& s) {
        if (processed) ++s.processed;
        s.units += units;
        s.header_units += header_units;
        if (expected) ++(*expected ? s.expected : s.unexpected);
        ++s.outcomes[outcome];
    };
    apply(job.cls == ActorClass::Honest ? report_.honest : report_.attacker);
    if (!job.model.empty()) apply(report_.by_model[job.model]);
    ++report_.outcomes[outcome];
    if (sc_.trace) report_.trace.push_back(TraceRow{now, job.cls, job.actor, outcome});
}

// ---- honest clients -------------------------------------------------------

void Simulation::start_transfer(Honest& h) {
    const auto& g = *h.group;
    if (g.content.empty()) {
        h.content = h.rng.bytes(g.transfer_size);
    } else {
        h.content.resize(g.transfer_size);
        for (std::uint64_t i = 0; i < g.transfer_size; ++i) {
            h.content[i] = static_cast<std::uint8_t>(g.content[i % g.content.size()]);
        }
    }
    h.digest = crypto::digest(h.content);
    h.plan.reset();
    h.next_entry = 0;
    h.offset = 0;
    ++h.started;
    ++report_.transfers.requested;
}

void Simulation::send_ca(Honest& h, Bytes raw) {
    Job job;
    job.cls = ActorClass::Honest;
    job.actor = h.index;
    job.src = h.src;
    job.raw = std::move(raw);
    enqueue(std::move(job));
}

void Simulation::send_transfer_request(Honest& h, Tick now) {
    TransferSpec spec;
    spec.client = h.client;
    spec.total_size = h.content.size();
    spec.name = "c" + std::to_string(h.index) + "-t" + std::to_string(h.started);
    spec.content_digest = h.digest;
    spec.service = h.group->service;
    const auto seq = h.control_seq++;
    h.outstanding.insert(seq);
    Job job;
    job.cls = ActorClass::Honest;
    job.actor = h.index;
    job.acc = true;
    job.src = h.src;
    job.endpoint = h.session_endpoint;
    job.packet = acc::seal_transfer_request(h.client, h.src, h.session_endpoint, seq, spec, h.master);
    enqueue(std::move(job));
    h.phase = Phase::AwaitPlan;
    h.deadline = now + h.group->retry_after;
}

void Simulation::send_data(Honest& h) {
    const auto& entries = h.plan->entries;
    for (std::uint32_t k = 0; k < h.group->packets_per_tick && h.next_entry < entries.size(); ++k) {
        const auto& entry = entries[h.next_entry++];
        const ByteView payload(h.content.data() + h.offset, entry.header.payload_len);
        h.offset += entry.header.payload_len;
        Job job;
        job.cls = ActorClass::Honest;
        job.actor = h.index;
        job.acc = true;
        job.src = h.src;
        job.endpoint = entry.endpoint;
        job.packet = acc::seal_data_packet(entry, h.master, payload);
        capture_.push_back(Captured{job.endpoint, job.packet});
        if (capture_.size() > kCaptureLimit) capture_.pop_front();
        enqueue(std::move(job));
    }
}

void Simulation::honest_act(Honest& h, Tick now) {
    const auto& g = *h.group;
    switch (h.phase) {
        case Phase::Waiting:
            if (now < h.wake) return;
            send_ca(h, make_initial_request());
            h.phase = Phase::AwaitKey;
            h.deadline = now + g.retry_after;
            return;
        case Phase::AwaitKey:
        case Phase::AwaitDispatch:
            if (now < h.deadline) return;
            send_ca(h, make_initial_request());
            h.phase = Phase::AwaitKey;
            h.deadline = now + g.retry_after;
            return;
        case Phase::WaitSig:
            if (now < h.wake) return;
            send_ca(h, make_signature_request(h.sig));
            h.phase = Phase::AwaitDispatch;
            h.deadline = now + g.retry_after;
            return;
        case Phase::RequestPlan:
            if (now < h.wake) return;
            send_transfer_request(h, now);
            return;
        case Phase::AwaitPlan:
            if (now < h.deadline) return;
            send_transfer_request(h, now);
            return;
        case Phase::Sending:
            send_data(h);
            if (h.next_entry < h.plan->entries.size()) return;
            if (h.started < g.transfers) {
                start_transfer(h);
                h.phase = Phase::RequestPlan;
                h.wake = now + 1 + g.think_time;
            } else {
                h.phase = Phase::Done;
            }
            return;
        case Phase::Done:
            return;
    }
}

void Simulation::deliver_downlinks(Tick now) {
    while (!downlinks_.empty() && downlinks_.front().at <= now) {
        auto d = std::move(downlinks_.front());
        downlinks_.pop_front();
        auto& h = honest_[d.honest];
        switch (d.kind) {
            case Downlink::Kind::PublicKey:
                if (h.phase == Phase::AwaitKey) {
                    h.phase = Phase::WaitSig;
                    h.wake = now + sc_.engine.t_fixed;
                }
                break;
            case Downlink::Kind::Dispatch: {
                if (h.authenticated) break;
                const auto key = crypto::derive_key(h.pki, 0, d.dispatch.client.value);
                const auto master = crypto::open(key, d.dispatch.sealed_master);
                if (!master || master->size() != h.master.bytes.size()) {
                    violation("honest client " + std::to_string(h.index) + " could not open its dispatch");
                    break;
                }
                std::copy(master->begin(), master->end(), h.master.bytes.begin());
                h.authenticated = true;
                h.client = d.dispatch.client;
                h.session_endpoint = d.dispatch.next_endpoint;
                honest_by_client_[h.client] = h.index;
                start_transfer(h);
                h.phase = Phase::RequestPlan;
                h.wake = now;
                break;
            }
            case Downlink::Kind::ControlReply: {
                if (h.phase != Phase::AwaitPlan || !h.outstanding.contains(d.seq)) break;
                const auto plain = crypto::open(acc::reply_key(h.master, h.client, d.seq), d.sealed);
                auto plan = plain ? acc::decode_plan_delivery(*plain) : std::nullopt;
                if (!plan) {
                    violation("honest client " + std::to_string(h.index) + " received an unreadable plan");
                    break;
                }
                h.outstanding.clear();
                h.session_endpoint = plan->next_endpoint;
                plan_records_[plan->plan_id] = PlanRecord{h.index, h.digest, 0};
                h.plan = std::move(*plan);
                h.next_entry = 0;
                h.offset = 0;
                h.phase = Phase::Sending;
                ++report_.transfers.planned;
                break;
            }
        }
    }
}

// ---- attackers --------------------------------------------------------------

std::optional<Job> Simulation::attacker_datagram(Attacker& a) {
    const auto& spec = *a.spec;
    auto& rng = a.rng;
    Job job;
    job.cls = ActorClass::Attacker;
    job.actor = a.index;
    job.model = std::string(to_string(spec.model));
    const auto uniform_endpoint = [&] {
        return EndpointId{static_cast<std::uint16_t>(rng.below(sc_.endpoints))};
    };

    if (spec.model == AttackerModel::FloodFixedSource || spec.model == AttackerModel::FloodRotatingSource) {
        job.src = spec.model == AttackerModel::FloodFixedSource
                      ? a.fixed_src
                      : SourceAddr{kRotatingAttackerBase | static_cast<std::uint32_t>(rng.below(1U << 28))};
        if (spec.channel == Channel::Ca) {
            switch (spec.payload) {
                case FloodPayload::Initial: job.raw = make_initial_request(); break;
                case FloodPayload::InvalidSignature:
                    job.raw = make_signature_request(a.pool[rng.below(a.pool.size())]);
                    break;
                case FloodPayload::Malformed: job.raw = rng.bytes(1 + rng.below(320)); break;
            }
            return job;
        }
        // Forged data datagram aimed at low plan ids, where live plans are.
        PacketHeader h;
        h.plan_id = 1 + rng.below(64);
        h.seq = static_cast<std::uint32_t>(rng.below(4));
        h.payload_len = static_cast<std::uint32_t>(1 + rng.below(sc_.engine.payload_cap));
        h.source = job.src;
        h.dest = uniform_endpoint();
        h.kind = PacketKind::Data;
        job.acc = true;
        job.endpoint = h.dest;
        job.packet = Packet{h, rng.bytes(h.payload_len + kHeaderBytes + kStampTokenBytes + crypto::kSealOverhead)};
        return job;
    }

    if (capture_.empty()) return std::nullopt;
    const auto& pick = capture_[rng.below(capture_.size())];
    job.acc = true;
    job.packet = pick.packet;
    job.endpoint = spec.uniform_destination ? uniform_endpoint() : pick.endpoint;
    job.guessed = spec.uniform_destination &&
                  (spec.model == AttackerModel::Replayer || spec.model == AttackerModel::Spoofer);
    auto& h = job.packet.clear_header;
    const auto nonzero = [&](std::uint64_t bits) { return 1 + rng.below((bits >= 64 ? ~0ULL : (1ULL << bits) - 1)); };

    switch (spec.model) {
        case AttackerModel::Replayer: break;
        case AttackerModel::Spoofer:
            h.source.value ^= static_cast<std::uint32_t>(nonzero(32));
            break;
        case AttackerModel::MaliciousMutator: {
            auto& body = job.packet.sealed_body;
            const auto target = rng.below(6 + body.size());
            switch (target) {
                case 0: h.plan_id ^= nonzero(64); break;
                case 1: h.seq ^= static_cast<std::uint32_t>(nonzero(32)); break;
                case 2: h.payload_len ^= static_cast<std::uint32_t>(nonzero(32)); break;
                case 3: h.source.value ^= static_cast<std::uint32_t>(nonzero(32)); break;
                case 4: h.dest.index ^= static_cast<std::uint16_t>(nonzero(16)); break;
                case 5: h.kind = h.kind == PacketKind::Data ? PacketKind::Control : PacketKind::Data; break;
                default: body[target - 6] ^= static_cast<std::uint8_t>(nonzero(8)); break;
            }
            break;
        }
        default: break;
    }
    job.src = h.source;
    return job;
}

void Simulation::attacker_act(Attacker& a, Tick now) {
    const auto& spec = *a.spec;
    if (now < spec.start || now >= spec.stop) return;
    a.credit += spec.rate;
    const auto k = static_cast<std::uint64_t>(std::floor(a.credit));
    a.credit -= static_cast<double>(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        if (auto job = attacker_datagram(a)) enqueue(std::move(*job));
    }
}

// ---- server side --------------------------------------------------------------

Units Simulation::process(const Job& job, Tick now) { return job.acc ? process_acc(job, now) : process_ca(job, now); }

Units Simulation::process_ca(const Job& job, Tick now) {
    const auto r = server_.handle_ca(job.raw, job.src, now);
    const auto name = ca_outcome_name(r);
    record(job, name, r.units, server_.config().costs.header_inspect, std::nullopt, now);

    const auto verdict = r.filter.verdict;
    if (verdict != FilterVerdict::DropMalformed && verdict != FilterVerdict::DropRateLimited) {
        if (auto it = gate_open_at_.find(job.src); it != gate_open_at_.end() && now < it->second) {
            violation("source " + std::to_string(job.src.value) + " passed the gate at tick " + std::to_string(now) +
                      " before " + std::to_string(it->second));
        }
        if (auto until = server_.filter().blocked_until(job.src, now)) {
            gate_open_at_[job.src] = *until;
        } else {
            gate_open_at_.erase(job.src);
        }
    }

    if (r.auth) {
        if (const auto* issued = std::get_if<AuthIssued>(&*r.auth)) {
            event(now, "auth_issued", "client " + std::to_string(issued->ticket.client.value & ~kClientIdTag) +
                                          " endpoint " + std::to_string(issued->endpoint.index));
        } else {
            event(now, "auth_rejected", "blacklist rank " + std::to_string(std::get<AuthInvalid>(*r.auth).blacklist_rank));
        }
    }

    if (job.cls != ActorClass::Honest) return r.units;
    const auto who = honest_by_src_.find(job.src);
    if (who == honest_by_src_.end()) return r.units;
    if (verdict == FilterVerdict::ReplyPublicKey) {
        Downlink d;
        d.at = now + 1;
        d.kind = Downlink::Kind::PublicKey;
        d.honest = who->second;
        downlinks_.push_back(std::move(d));
    } else if (r.auth && std::holds_alternative<AuthIssued>(*r.auth)) {
        Downlink d;
        d.at = now + 1;
        d.kind = Downlink::Kind::Dispatch;
        d.honest = who->second;
        d.dispatch = std::get<AuthIssued>(*r.auth).dispatch;
        downlinks_.push_back(std::move(d));
    }
    return r.units;
}

Units Simulation::process_acc(const Job& job, Tick now) {
    const auto opens_before = server_.gateway().open_calls();
    auto r = server_.handle_acc(job.endpoint, job.packet, now);
    const std::string name(to_string(r.outcome));
    record(job, name, r.units, r.header_units, r.expected, now);

    if (r.outcome == GatewayOutcome::DropUnexpected) {
        if (server_.gateway().open_calls() != opens_before) violation("an unexpected datagram reached body open");
        max_unexpected_units_ = std::max(max_unexpected_units_.value_or(0), r.units);
    }
    if (r.outcome == GatewayOutcome::Forwarded) {
        min_forwarded_units_ = std::min(min_forwarded_units_.value_or(r.units), r.units);
    }

    if (job.cls == ActorClass::Attacker) {
        auto& s = report_.acc_attack;
        ++s.processed;
        if (r.expected) ++s.expected;
        if (name.rfind("Drop", 0) == 0) ++s.drops;
        s.units += r.units;
        s.post_header_units += r.units - r.header_units;
        if (job.guessed) {
            ++s.guessed;
            if (r.expected) ++s.guessed_expected;
            s.guessed_post_header_units += r.units - r.header_units;
        }
    }

    if (r.delivery) {
        auto rec = plan_records_.find(r.delivery->plan_id);
        if (rec == plan_records_.end()) {
            violation("delivery for plan " + std::to_string(r.delivery->plan_id) + " no honest client sent");
        } else {
            ++rec->second.deliveries;
            ++report_.transfers.delivered;
            if (rec->second.deliveries > 1) {
                ++report_.transfers.duplicate_deliveries;
                violation("plan " + std::to_string(r.delivery->plan_id) + " delivered more than once");
            }
            if (r.delivery->digest == rec->second.digest) {
                ++report_.transfers.digest_ok;
            } else {
                violation("plan " + std::to_string(r.delivery->plan_id) + " delivered content that differs from the original");
            }
        }
        event(now, "delivery", "plan " + std::to_string(r.delivery->plan_id) + " bytes " + std::to_string(r.delivery->size));
    }
    if (r.threat_rule) event(now, "threat", "rule " + *r.threat_rule);
    if (r.terminated) {
        ++report_.terminations;
        const bool honest = honest_by_client_.contains(*r.terminated);
        if (honest) ++report_.honest_terminations;
        event(now, "termination", std::string(honest ? "honest" : "other") + " client " +
                                      std::to_string(r.terminated->value & ~kClientIdTag) + " after " + name);
    }
    if (r.reply_to) {
        if (auto who = honest_by_client_.find(*r.reply_to); who != honest_by_client_.end()) {
            Downlink d;
            d.at = now + 1;
            d.kind = Downlink::Kind::ControlReply;
            d.honest = who->second;
            d.seq = job.packet.clear_header.seq;
            d.sealed = std::move(r.reply);
            downlinks_.push_back(std::move(d));
        }
        if (r.outcome == GatewayOutcome::PlanDelivered) {
            event(now, "plan", "client " + std::to_string(r.reply_to->value & ~kClientIdTag));
        }
    }
    return r.units;
}

void Simulation::final_checks() {
    auto conserve = [&](const ClassStats& s, std::string_view label) {
        std::uint64_t total = 0;
        for (const auto& [_, n] : s.outcomes) total += n;
        if (total != s.injected) {
            violation(std::string(label) + " outcomes (" + std::to_string(total) + ") differ from injected (" +
                      std::to_string(s.injected) + ")");
        }
    };
    conserve(report_.honest, "honest");
    conserve(report_.attacker, "attacker");
    if (max_unexpected_units_ && min_forwarded_units_ && *max_unexpected_units_ >= *min_forwarded_units_) {
        violation("an unexpected-drop cost " + std::to_string(*max_unexpected_units_) +
                  " is not below the cheapest forward " + std::to_string(*min_forwarded_units_));
    }
    if (report_.total_units > sc_.units_per_tick * sc_.duration) violation("units consumed exceed s * duration");
}

SimReport Simulation::run() {
    Units carry = 0;
    report_.series.reserve(sc_.duration);
    for (Tick now = 0; now < sc_.duration; ++now) {
        now_ = now;
        deliver_downlinks(now);
        for (auto& h : honest_) honest_act(h, now);
        for (auto& a : attackers_) attacker_act(a, now);

        // A job starts while budget remains; work it cannot finish this tick
        // carries into the next ticks before anything else starts.
        Units budget = sc_.units_per_tick;
        const auto spent_on_carry = std::min(carry, budget);
        carry -= spent_on_carry;
        budget -= spent_on_carry;
        TickSample sample;
        sample.tick = now;
        while (budget > 0 && !queue_.empty()) {
            const auto job = std::move(queue_.front());
            queue_.pop_front();
            const auto units = process(job, now);
            ++sample.processed;
            if (job.cls == ActorClass::Honest) ++sample.processed_honest;
            if (units <= budget) {
                budget -= units;
            } else {
                carry = units - budget;
                budget = 0;
            }
        }
        sample.units = sc_.units_per_tick - budget;
        sample.queue_depth = queue_.size();
        report_.total_units += sample.units;
        report_.peak_processed = std::max(report_.peak_processed, sample.processed);
        if (sample.units > sc_.units_per_tick) violation("tick " + std::to_string(now) + " exceeded its budget");
        report_.series.push_back(sample);
    }
    report_.carried_over = carry;
    for (const auto& job : queue_) record(job, "Unprocessed", 0, 0, std::nullopt, sc_.duration, false);
    queue_.clear();

    report_.siv_calls = server_.siv().calls();
    report_.open_calls = server_.gateway().open_calls();
    report_.tickets_issued = server_.tickets().counters().issued;
    report_.stamps_issued = server_.stamps().issued();
    report_.blacklist_size = server_.filter().blacklist().size();
    for (const auto& [key, stat] : server_.filter().gate_stats()) {
        report_.gate.push_back(GateRow{key.first, key.second, stat.duration, stat.times});
    }
    final_checks();
    return std::move(report_);
}

}  // namespace

SimReport simulate(const Scenario& sc) {
    const auto problems = validate_scenario(sc);
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw Error(Errc::ConfigInvalid, msg);
    }
    Simulation sim(sc);
    return sim.run();
}

}  // namespace stampgate
