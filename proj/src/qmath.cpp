#include "tempodisc/qmath.hpp"

#include <cmath>

namespace tempodisc {

double pow1p(double x, double p) {
    detail::require_finite(x, "pow1p base offset");
    detail::require_finite(p, "pow1p exponent");
    if (!(x > -1.0))
        throw DomainError("pow1p requires 1 + x > 0");
    return std::exp(p * std::log1p(x));
}

double q_exp(QIndex q, double x) {
    detail::require_finite(x, "q_exp argument");
    const double one_minus_q = 1.0 - q.value();
    if (std::fabs(one_minus_q) < kExponentialLimitSwitch)
        return std::exp(x);
    const double u = one_minus_q * x;
    if (!(u > -1.0))
        throw DomainError("q_exp requires 1 + (1-q) x > 0");
    return pow1p(u, 1.0 / one_minus_q);
}

double q_log(QIndex q, double y) {
    detail::require_finite(y, "q_log argument");
    if (!(y > 0.0))
        throw DomainError("q_log requires y > 0");
    const double one_minus_q = 1.0 - q.value();
    if (std::fabs(one_minus_q) < kExponentialLimitSwitch)
        return std::log(y);
    // expm1 keeps y^(1-q) - 1 exact when (1-q) log y is tiny.
    return std::expm1(one_minus_q * std::log(y)) / one_minus_q;
}

}  // namespace tempodisc
