#include "stampgate/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "stampgate/error.hpp"
#include "stampgate/netsim.hpp"

namespace stampgate {

namespace {

using u128 = unsigned __int128;

Fraction reduce(u128 num, u128 den) {
    if (den == 0) throw Error(Errc::DivisorZero, "fraction with zero denominator");
    u128 a = num, b = den;
    while (b != 0) {
        const u128 r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    if (num > UINT64_MAX || den > UINT64_MAX) throw Error(Errc::InvalidArgument, "fraction overflow");
    Fraction f;
    f.num = static_cast<std::uint64_t>(num);
    f.den = static_cast<std::uint64_t>(den);
    return f;
}

}  // namespace

Fraction::Fraction(std::uint64_t n, std::uint64_t d) { *this = reduce(n, d); }

Fraction operator+(const Fraction& a, const Fraction& b) {
    return reduce(u128{a.num} * b.den + u128{b.num} * a.den, u128{a.den} * b.den);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    const u128 lhs = u128{a.num} * b.den;
    const u128 rhs = u128{b.num} * a.den;
    return reduce(lhs > rhs ? lhs - rhs : 0, u128{a.den} * b.den);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return reduce(u128{a.num} * b.num, u128{a.den} * b.den);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num == 0) throw Error(Errc::DivisorZero, "division by zero");
    return reduce(u128{a.num} * b.den, u128{a.den} * b.num);
}

std::uint64_t capacity(std::uint64_t s, std::uint64_t p) {
    if (p == 0) throw Error(Errc::DivisorZero, "p must be > 0");
    return s / p;
}

FloodTime predict_flood_time(const EfficiencyParams& q) {
    if (q.I == 0) throw Error(Errc::DivisorZero, "I must be > 0");
    FloodTime out;
    out.T = Fraction(q.N_c) * q.P_c_avg * Fraction(q.t) + Fraction(q.N_f) * q.P_f_avg * Fraction(q.t);
    const Fraction share(1, q.I);
    out.T_f_request = Fraction(q.n_f_acc) * Fraction(q.t) * share;
    // The not-expected share is dropped at the header and costs nothing here.
    out.T_f_requests = share * Fraction(q.n_f_acc) * Fraction(q.post_header_cost) * Fraction(q.t);
    return out;
}

StampSavings predict_stamp_savings(std::uint64_t n_mal, Units t_c, Units t_d) noexcept {
    StampSavings s;
    s.T_prime = n_mal * t_c;
    s.T_double_prime = n_mal * t_d;
    s.T_saved = t_c > t_d ? n_mal * (t_c - t_d) : 0;
    return s;
}

PredictedMetrics predict(const EfficiencyParams& q) {
    PredictedMetrics m;
    m.n = capacity(q.s, q.p);
    if (m.n == 0) throw Error(Errc::CapacityZero, "s / p rounds to zero clients");
    m.D = (Fraction(q.t_fixed) * Fraction(std::min(q.c, m.n), m.n)).ceil();
    m.N = q.N_c + q.N_f;
    m.P = Fraction(q.N_c) * q.P_c_avg + Fraction(q.N_f) * q.P_f_avg;
    const auto flood = predict_flood_time(q);
    m.T = flood.T;
    m.expected_fraction = Fraction(1, q.I);
    m.T_f_request = flood.T_f_request;
    m.stamps = predict_stamp_savings(q.n_mal, q.t_c, q.t_d);
    return m;
}

EfficiencyParams efficiency_params(const SimReport& r) {
    const auto& sc = r.scenario;
    EfficiencyParams q;
    q.p = sc.engine.p;
    q.s = sc.units_per_tick;
    q.t_fixed = sc.engine.t_fixed;
    q.n = capacity(q.s, q.p);
    q.c = std::min<std::uint64_t>(r.tickets_issued - std::min(r.tickets_issued, r.terminations), q.n);
    q.N_c = r.honest.processed;
    q.N_f = r.attacker.processed;
    q.N = q.N_c + q.N_f;
    q.P = r.honest.units + r.attacker.units;
    q.P_c_avg = q.N_c ? Fraction(r.honest.units, q.N_c) : Fraction();
    q.P_f_avg = q.N_f ? Fraction(r.attacker.units, q.N_f) : Fraction();
    q.I = sc.endpoints;
    q.t = 1;
    q.t_c = sc.costs.stamp_check;
    q.t_d = sc.costs.drop;
    q.n_mal = r.acc_attack.drops;
    q.n_f_acc = r.acc_attack.guessed;
    q.post_header_cost = sc.costs.open_body + (sc.engine.force_full_check ? sc.costs.stamp_check : sc.costs.drop);
    return q;
}

std::string_view to_string(Check c) noexcept {
    switch (c) {
        case Check::Exact: return "exact";
        case Check::ThreeSigma: return "3sigma";
        case Check::Info: return "info";
        case Check::Unmeasured: return "unmeasured";
    }
    return "unknown";
}

namespace {

ComparisonRow make_row(std::string metric, double predicted, double measured, Check check, double tolerance = 0) {
    ComparisonRow row;
    row.metric = std::move(metric);
    row.predicted = predicted;
    row.measured = measured;
    row.check = check;
    row.tolerance = tolerance;
    const double diff = std::fabs(measured - predicted);
    row.rel_error = predicted != 0 ? diff / std::fabs(predicted) : (measured == 0 ? 0.0 : 1.0);
    const double slack = 1e-9 * std::max(1.0, std::fabs(predicted));
    switch (check) {
        case Check::Exact: row.within = diff <= slack; break;
        case Check::ThreeSigma: row.within = diff <= tolerance + slack; break;
        case Check::Info: row.within = true; break;
        case Check::Unmeasured: row.within = true; break;
    }
    return row;
}

// Binomial band for a count of N draws with success probability p.
double three_sigma_count(std::uint64_t N, double p) { return 3.0 * std::sqrt(static_cast<double>(N) * p * (1.0 - p)); }

}  // namespace

ComparisonTable compare(const SimReport& report, const EfficiencyParams& q, const SimReport* full_check) {
    const auto& sc = report.scenario;
    if (q.s != sc.units_per_tick || q.p != sc.engine.p || q.I != sc.endpoints || q.t_fixed != sc.engine.t_fixed) {
        throw Error(Errc::ScenarioMismatch, "parameters describe a different scenario than the report");
    }
    if (full_check) {
        const auto& other = full_check->scenario;
        if (other.seed != sc.seed || other.endpoints != sc.endpoints || other.units_per_tick != sc.units_per_tick ||
            other.duration != sc.duration || other.attackers.size() != sc.attackers.size()) {
            throw Error(Errc::ScenarioMismatch, "paired full-check run comes from a different scenario");
        }
    }

    const auto m = predict(q);
    ComparisonTable table;
    auto& rows = table.rows;

    const std::uint64_t processed = report.honest.processed + report.attacker.processed;
    const Units job_units = report.honest.units + report.attacker.units;
    const double mean_cost = processed ? static_cast<double>(job_units) / static_cast<double>(processed) : 0.0;
    rows.push_back(make_row("capacity_n", static_cast<double>(m.n),
                            mean_cost > 0 ? std::floor(static_cast<double>(q.s) / mean_cost) : 0.0, Check::Info));
    rows.push_back(make_row("peak_processed_per_tick", static_cast<double>(m.n),
                            static_cast<double>(report.peak_processed), Check::Info));

    std::uint64_t matching = 0;
    for (const auto& g : report.gate) {
        const auto predicted = (Fraction(q.t_fixed) * Fraction(g.c, g.n)).ceil();
        if (predicted == g.duration) ++matching;
        rows.push_back(make_row("block_duration[c=" + std::to_string(g.c) + ",n=" + std::to_string(g.n) + "]",
                                static_cast<double>(predicted), static_cast<double>(g.duration), Check::Exact));
    }
    rows.push_back(make_row("block_duration_rows_matching", static_cast<double>(report.gate.size()),
                            static_cast<double>(matching), Check::Exact));

    std::uint64_t series_processed = 0;
    for (const auto& t : report.series) series_processed += t.processed;
    rows.push_back(make_row("requests_N", static_cast<double>(m.N), static_cast<double>(series_processed), Check::Exact));
    rows.push_back(make_row("requests_N_c", static_cast<double>(q.N_c), static_cast<double>(report.honest.processed),
                            Check::Exact));
    rows.push_back(make_row("requests_N_f", static_cast<double>(q.N_f), static_cast<double>(report.attacker.processed),
                            Check::Exact));
    rows.push_back(make_row("units_P", m.P.value(), static_cast<double>(report.total_units + report.carried_over),
                            Check::Exact));
    rows.push_back(make_row("processing_time_T", m.T.value(), static_cast<double>(report.total_units + report.carried_over),
                            Check::Exact));

    const auto n_acc = q.n_f_acc;
    const double share = m.expected_fraction.value();
    rows.push_back(make_row("attacker_expected", static_cast<double>(n_acc) * share,
                            static_cast<double>(report.acc_attack.guessed_expected), Check::ThreeSigma,
                            three_sigma_count(n_acc, share)));
    rows.push_back(make_row("attacker_not_expected", static_cast<double>(n_acc) * (1.0 - share),
                            static_cast<double>(n_acc - report.acc_attack.guessed_expected), Check::ThreeSigma,
                            three_sigma_count(n_acc, share)));
    if (n_acc > 0) {
        const double frac = static_cast<double>(report.acc_attack.guessed_expected) / static_cast<double>(n_acc);
        rows.push_back(make_row("expected_fraction", share, frac, Check::ThreeSigma,
                                3.0 * std::sqrt(share * (1.0 - share) / static_cast<double>(n_acc))));
    }

    const auto flood = predict_flood_time(q);
    rows.push_back(make_row("attacker_units_past_header", flood.T_f_requests.value(),
                            static_cast<double>(report.acc_attack.guessed_post_header_units), Check::ThreeSigma,
                            static_cast<double>(q.post_header_cost) * three_sigma_count(n_acc, share)));

    if (full_check && !sc.engine.force_full_check) {
        const auto& a = report.acc_attack;
        const auto& b = full_check->acc_attack;
        const double measured = static_cast<double>(b.units) - static_cast<double>(a.units);
        const double band = 3.0 * static_cast<double>(q.t_c - std::min(q.t_c, q.t_d)) *
                            std::sqrt(static_cast<double>(q.n_mal));
        rows.push_back(make_row("stamp_savings_T_saved", static_cast<double>(m.stamps.T_saved), measured, Check::ThreeSigma, band));
    } else {
        rows.push_back(make_row("stamp_savings_T_saved", static_cast<double>(m.stamps.T_saved),
                                std::numeric_limits<double>::quiet_NaN(), Check::Unmeasured));
    }
    return table;
}

bool ComparisonTable::all_within() const {
    return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.within; });
}

const ComparisonRow* ComparisonTable::find(std::string_view metric) const {
    for (const auto& r : rows) {
        if (r.metric == metric) return &r;
    }
    return nullptr;
}

namespace {

std::string number(double v) {
    if (std::isnan(v)) return "";
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

}  // namespace

std::string ComparisonTable::to_csv() const {
    std::string out = "metric,predicted,measured,rel_error,check,tolerance,within\n";
    for (const auto& r : rows) {
        out += '"' + r.metric + "\"," + number(r.predicted) + ',' + number(r.measured) + ',' + number(r.rel_error) +
               ',' + std::string(to_string(r.check)) + ',' + number(r.tolerance) + ',' + (r.within ? "true" : "false") +
               '\n';
    }
    return out;
}

std::string ComparisonTable::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row = {{"metric", r.metric},
                              {"predicted", r.predicted},
                              {"rel_error", r.rel_error},
                              {"check", to_string(r.check)},
                              {"tolerance", r.tolerance},
                              {"within", r.within}};
        row["measured"] = std::isnan(r.measured) ? nlohmann::json(nullptr) : nlohmann::json(r.measured);
        rows_json.push_back(std::move(row));
    }
    return rows_json.dump(2);
}

}  // namespace stampgate
