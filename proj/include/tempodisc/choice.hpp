#pragma once

#include "tempodisc/types.hpp"

namespace tempodisc {

// Default contrast band, in dB, below which two time averages are treated
// as indistinguishable by the decision maker. Overridable per call.
inline constexpr double kDefaultIndifferenceThresholdDb = 0.65;

// A pair of risky payment hypotheses against a personal wealth: receive
// early_amount at the end of the first period with probability p_early, or
// late_amount at the end of the long period with probability p_late.
struct ChoiceProblem {
    ChoiceProblem(Wealth wealth, double early_amount, double late_amount,
                  Probability p_early, Probability p_late);

    Wealth wealth;
    double early_amount;  // m
    double late_amount;   // M, >= m
    Probability p_early;  // p_m
    Probability p_late;   // p_M
};

enum class PreferredSide { Early, Late, Indifferent };

const char* side_name(PreferredSide side);

// Outcome of the maximum-time-average criterion.
struct Preference {
    PreferredSide side;
    double contrast_db;           // |20 log10(g_late / g_early)|
    TimeAverage decision_average; // D_c, the larger of the two averages
    TimeAverage early_average;
    TimeAverage late_average;
};

// x = amount / wealth.
GrowthRate growth_rate(double amount, Wealth wealth);

// (1 + x)^p, the per-period growth factor of the repeated exposure.
TimeAverage time_average(GrowthRate x, Probability p);

// Picks the hypothesis with the larger time average at the end of the
// first period. Sides closer than the contrast threshold (in dB) are
// reported as indifferent; with threshold 0 only exact ties are.
Preference decide(const ChoiceProblem& problem,
                  double indifference_threshold_db = kDefaultIndifferenceThresholdDb);

}  // namespace tempodisc
