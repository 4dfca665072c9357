#include "tempodisc/probability.hpp"

namespace tempodisc {

PaymentDistribution PaymentDistribution::degenerate(double pay_period) {
    detail::require_finite(pay_period, "pay period");
    if (pay_period < 0.0)
        throw DomainError("pay period must be non-negative");
    return PaymentDistribution(DegeneratePayment{pay_period});
}

PaymentDistribution PaymentDistribution::uniform_delay(double horizon, double alpha) {
    detail::require_finite(horizon, "horizon");
    detail::require_finite(alpha, "delay factor");
    if (!(horizon > 0.0))
        throw DomainError("horizon must be positive");
    if (alpha < 1.0)
        throw DomainError("delay factor alpha must be >= 1");
    return PaymentDistribution(UniformDelayedPayment{horizon, alpha});
}

Probability PaymentDistribution::cumulative(double t) const {
    detail::require_finite(t, "t");
    if (t < 0.0)
        throw DomainError("t must be non-negative (periods since t0)");
    if (const auto* d = std::get_if<DegeneratePayment>(&law_))
        return Probability(t >= d->pay_period ? 1.0 : 0.0);
    const auto& u = std::get<UniformDelayedPayment>(law_);
    const double window = u.alpha * u.horizon;
    if (t >= window)
        return Probability(1.0);
    return Probability(t / window);
}

Probability PaymentDistribution::first_period() const {
    return cumulative(1.0);
}

RelativeFrequency relative_frequency(QIndex q, PeriodCount n) {
    if (q.value() <= 1.0)
        throw DomainError("relative_frequency requires q > 1");
    if (n.value() < 1.0)
        throw DomainError("relative_frequency requires n >= 1");
    const double denom = n.value() * (q.value() - 1.0);
    if (denom < 1.0)
        return {1.0, true};
    return {1.0 / denom, false};
}

}  // namespace tempodisc
