#pragma once

#include <variant>

#include "tempodisc/types.hpp"

namespace tempodisc {

// Deterministic payment: the cumulative probability jumps from 0 to 1 at
// the scheduled period.
struct DegeneratePayment {
    double pay_period;
};

// Maximum-entropy payment law: with no testable information the cumulative
// probability ramps uniformly, reaching 1 at alpha * horizon. alpha > 1
// stretches the window to model payments that may be delayed past the
// deadline.
struct UniformDelayedPayment {
    double horizon;  // scheduled number of periods (Delta t / delta t)
    double alpha;    // delay factor, >= 1
};

// Cumulative payment-probability law over time, measured in periods since t0.
class PaymentDistribution {
public:
    static PaymentDistribution degenerate(double pay_period);
    static PaymentDistribution uniform_delay(double horizon, double alpha = 1.0);

    // P(payment by t), piecewise 0 / ramp / 1. Requires t >= 0.
    Probability cumulative(double t) const;

    // Probability of payment by the end of the first period; 1/(alpha n)
    // for the uniform law with horizon n.
    Probability first_period() const;

    bool is_degenerate() const { return std::holds_alternative<DegeneratePayment>(law_); }

private:
    explicit PaymentDistribution(std::variant<DegeneratePayment, UniformDelayedPayment> law)
        : law_(std::move(law)) {}

    std::variant<DegeneratePayment, UniformDelayedPayment> law_;
};

// Relative frequency p_M / p_m between late and early payments when both
// can be delayed disproportionately: 1 / (n (q-1)) for q > 1, n >= 1.
// A ratio above 1 is impossible when p_m = 1, so values are capped there
// and the cap is flagged.
struct RelativeFrequency {
    double value;
    bool capped;
};

RelativeFrequency relative_frequency(QIndex q, PeriodCount n);

}  // namespace tempodisc
