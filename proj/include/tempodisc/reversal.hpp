#pragma once

#include "tempodisc/series.hpp"
#include "tempodisc/types.hpp"

namespace tempodisc {

// The family behind preference reversal: receive M after n periods, or a
// larger multiple of M one lag later. rate is a = M / W0.
struct ReversalScenario {
    ReversalScenario(GrowthRate rate, int horizon);

    GrowthRate rate;
    int horizon;  // last period to tabulate, >= 2
};

struct ReversalCurves {
    CurveSeries early;  // (1 + a)^(1/n)
    CurveSeries late;   // (1 + 2a)^(1/(n+1))
};

// Time averages of both hypotheses at n = 1..horizon.
ReversalCurves reversal_curves(const ReversalScenario& scenario);

// Real-valued period where (1 + a)^(1/n) meets (1 + 2a)^(1/(n+1)):
// n* = ln(1+a) / (ln(1+2a) - ln(1+a)). The late hypothesis dominates for
// every n > n*.
PeriodCount crossing_point(GrowthRate a);

// Generalized pair (M, k*M with lag L periods):
// n* = L ln(1+a) / (ln(1+ka) - ln(1+a)). k = 2, L = 1 is the default family.
PeriodCount crossing_point(GrowthRate a, double amount_multiple, double lag);

}  // namespace tempodisc
