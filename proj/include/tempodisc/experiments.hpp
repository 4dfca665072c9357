#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempodisc/types.hpp"

namespace tempodisc {

struct Horizon {
    std::string label;  // e.g. "3 months"
    double n;           // delay in periods, > 0
};

// A simulated lottery-prize discounter: one m0 per prize, asked for the
// amount that makes waiting each horizon just as attractive as the prize
// now. Observed responses (e.g. reported medians) are optional and only
// echoed next to the simulation for comparison.
struct ThalerScenario {
    Wealth w0;
    QIndex q;
    Probability p_m;
    std::vector<double> prizes;     // m0 values, positive
    std::vector<Horizon> horizons;  // strictly increasing n
    std::vector<std::vector<double>> observed;  // optional, [prize][horizon]
};

struct ThalerRow {
    double prize;
    std::string horizon_label;
    double n;
    double amount;  // simulated indifference amount M~
    double rate;    // per-period rate recovered from the amount
    std::optional<double> observed;
};

using ThalerTable = std::vector<ThalerRow>;

// Indifference amounts via the linear rule and the per-period rate
// recovered from each of them. first_period_amounts holds m (the amount at
// n = 1) per prize, m >= m0.
ThalerTable simulate_discounter(const ThalerScenario& scenario,
                                const std::vector<double>& first_period_amounts);

enum class MagnitudePattern { ReversedIncreasing, Flat, Classical, Mixed };

struct MagnitudeReport {
    MagnitudePattern pattern;
    std::string description;
    std::vector<std::pair<double, double>> prize_rates;  // (m0, rho), sorted by m0
};

// Orders per-prize discount rates by prize size. Rates that grow with the
// prize reverse the classically reported magnitude effect.
MagnitudeReport magnitude_effect(std::vector<std::pair<double, double>> prize_rates);
MagnitudeReport magnitude_effect(const ThalerTable& table);

// Pareto-distributed personal wealth, sampled by inverse CDF from a
// mt19937_64 stream (53-bit uniforms). exponent = +infinity degenerates to
// every draw equal to w_min.
struct ParetoWealth {
    double exponent;   // tail index, > 1 so the mean exists
    double w_min;      // scale, > 0
    std::size_t sample_size;
    std::uint64_t seed;
};

std::vector<double> sample_wealth(const ParetoWealth& population);

struct DispersionSummary {
    std::size_t size;
    double mean;
    double min;
    double q25;
    double median;
    double q75;
    double max;
    double iqr() const { return q75 - q25; }
};

// Distribution of per-period rates rho_i = (m - m0)/(W_i + m0) across a
// sampled wealth population. Deterministic for a fixed seed; quantiles use
// linear interpolation on the sorted sample.
DispersionSummary population_dispersion(const ParetoWealth& population, double m0, double m);

}  // namespace tempodisc
