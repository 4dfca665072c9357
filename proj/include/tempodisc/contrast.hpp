#pragma once

#include <cstdint>
#include <optional>

#include "tempodisc/types.hpp"

namespace tempodisc {

// Inputs of the contrast-ratio test between the early time average
// (1 + x_m)^(p_m) and the q-adjusted late average
// [1 + (q-1) n x_m]^(p_m/((q-1) n)).
struct ContrastQuery {
    ContrastQuery(GrowthRate x_m, QIndex q, Probability p_m, PeriodCount n);

    GrowthRate x_m;
    QIndex q;
    Probability p_m;
    PeriodCount n;  // >= 1
};

// CR_dB = -20 p_m log10([1 + (q-1) n x_m]^(1/((q-1) n)) / (1 + x_m)).
//
// Non-negative and non-decreasing in n whenever (q-1) n >= 1, which covers
// every case the discount family exercises at q >= 2. For (q-1) n < 1 the
// late average still exceeds the early one and the value is negative; the
// q -> 1 limit uses the constant ratio exp(x_m)/(1 + x_m).
double contrast_db(const ContrastQuery& query);

// Supremum of contrast_db over n at fixed x_m, q, p_m.
double contrast_db_limit(GrowthRate x_m, QIndex q, Probability p_m);

inline constexpr std::int64_t kDefaultHorizonCap = 1000000;

// Largest integer n >= 1 with contrast_db <= threshold_db, i.e. how long
// the two averages stay indistinguishable. Returns 0 when the contrast
// already exceeds the threshold at n = 1, and nullopt ("unbounded") when
// it never exceeds it within the cap.
std::optional<std::int64_t> distinguishability_horizon(GrowthRate x_m, QIndex q,
                                                       Probability p_m, double threshold_db,
                                                       std::int64_t cap = kDefaultHorizonCap);

}  // namespace tempodisc
