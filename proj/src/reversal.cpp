#include "tempodisc/reversal.hpp"

#include <cmath>

#include "tempodisc/qmath.hpp"

namespace tempodisc {

ReversalScenario::ReversalScenario(GrowthRate rate_, int horizon_)
    : rate(rate_), horizon(horizon_) {
    if (!(rate.value() > 0.0))
        throw DomainError("reversal rate must be positive");
    if (horizon < 2)
        throw DomainError("reversal horizon must be >= 2");
}

ReversalCurves reversal_curves(const ReversalScenario& scenario) {
    const double a = scenario.rate.value();
    CurveSeries early("M");
    CurveSeries late("2M");
    for (int n = 1; n <= scenario.horizon; ++n) {
        early.append(n, pow1p(a, 1.0 / n));
        late.append(n, pow1p(2.0 * a, 1.0 / (n + 1)));
    }
    return {std::move(early), std::move(late)};
}

PeriodCount crossing_point(GrowthRate a) {
    return crossing_point(a, 2.0, 1.0);
}

PeriodCount crossing_point(GrowthRate a, double amount_multiple, double lag) {
    detail::require_finite(amount_multiple, "amount multiple");
    detail::require_finite(lag, "lag");
    if (!(a.value() > 0.0))
        throw DomainError("crossing_point requires a > 0");
    if (amount_multiple <= 1.0)
        throw DomainError("amount multiple must exceed 1");
    if (!(lag > 0.0))
        throw DomainError("lag must be positive");
    const double log_small = std::log1p(a.value());
    const double log_large = std::log1p(amount_multiple * a.value());
    return PeriodCount(lag * log_small / (log_large - log_small));
}

}  // namespace tempodisc
