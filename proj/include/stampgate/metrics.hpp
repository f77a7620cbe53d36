#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stampgate/core_model.hpp"

namespace stampgate {

struct SimReport;

// Exact non-negative rational with 64-bit parts, reduced after every step.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Fraction() = default;
    Fraction(std::uint64_t n, std::uint64_t d = 1);

    [[nodiscard]] double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::uint64_t ceil() const noexcept { return num / den + (num % den != 0 ? 1 : 0); }
    [[nodiscard]] std::uint64_t floor() const noexcept { return num / den; }

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);  // clamps at zero
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);  // throws DivisorZero
    friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
        return a.num == b.num && a.den == b.den;
    }
};

// Throws Error(DivisorZero) when p == 0.
std::uint64_t capacity(std::uint64_t s, std::uint64_t p);

struct EfficiencyParams {
    std::uint64_t p = 12;
    std::uint64_t s = 1200;
    Tick t_fixed = 10;
    std::uint64_t c = 0;
    std::uint64_t n = 0;
    std::uint64_t N = 0;
    std::uint64_t N_c = 0;
    std::uint64_t N_f = 0;
    Units P = 0;
    // Honest and attacker requests cost different amounts, so each gets its own average.
    Fraction P_c_avg;
    Fraction P_f_avg;
    std::uint16_t I = 1;
    Units t = 1;
    Units t_c = 5;
    Units t_d = 1;
    std::uint64_t n_mal = 0;
    // Attacker copies of live headers sent to a uniformly drawn endpoint, the
    // count the per-endpoint share is taken of.
    std::uint64_t n_f_acc = 0;
    // Per-datagram cost past the header for an expected attacker datagram.
    Units post_header_cost = 4;
};

struct FloodTime {
    Fraction T;            // N_c * P_c * t + N_f * P_f * t
    Fraction T_f_request;  // n_f_acc * t / I
    Fraction T_f_requests; // same split with the not-expected share costing nothing past the header
};

// Throws Error(DivisorZero) when I == 0.
FloodTime predict_flood_time(const EfficiencyParams& params);

struct StampSavings {
    Units T_prime = 0;         // n_mal * t_c
    Units T_double_prime = 0;  // n_mal * t_d
    Units T_saved = 0;         // n_mal * (t_c - t_d), zero when t_c <= t_d
};

StampSavings predict_stamp_savings(std::uint64_t n_mal, Units t_c, Units t_d) noexcept;

struct PredictedMetrics {
    std::uint64_t n = 0;
    Tick D = 0;
    std::uint64_t N = 0;
    Fraction P;
    Fraction T;
    Fraction expected_fraction;
    Fraction T_f_request;
    StampSavings stamps;
};

PredictedMetrics predict(const EfficiencyParams& params);

// Reads every symbol off a finished run.
EfficiencyParams efficiency_params(const SimReport& report);

enum class Check { Exact, ThreeSigma, Info, Unmeasured };

std::string_view to_string(Check c) noexcept;

struct ComparisonRow {
    std::string metric;
    double predicted = 0;
    double measured = 0;
    double rel_error = 0;
    Check check = Check::Info;
    double tolerance = 0;  // absolute band for Exact / ThreeSigma rows
    bool within = true;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;

    [[nodiscard]] std::string to_csv() const;
    [[nodiscard]] std::string to_json() const;
    [[nodiscard]] bool all_within() const;
    [[nodiscard]] const ComparisonRow* find(std::string_view metric) const;
};

// `full_check` is the same scenario rerun with every drop priced as a full
// check; without it the savings row is left unmeasured. Throws
// Error(ScenarioMismatch) when params or the paired run belong to another scenario.
ComparisonTable compare(const SimReport& report, const EfficiencyParams& params,
                        const SimReport* full_check = nullptr);

}  // namespace stampgate
