#include "tempodisc/contrast.hpp"

#include <cmath>
#include <numbers>

#include "tempodisc/qmath.hpp"

namespace tempodisc {

namespace {

constexpr double kDbPerNat = 20.0 / std::numbers::ln10;

// log10 of the early/late amplitude ratio in nats, before the p_m scaling.
// Working in log space keeps the small-x_m cases exact and makes the value
// exactly linear in p_m.
double contrast_base_db(double x, double q, double n) {
    const double qm1 = q - 1.0;
    if (qm1 < kExponentialLimitSwitch)
        return -kDbPerNat * (x - std::log1p(x));
    const double eps = qm1 * n;
    return kDbPerNat * (std::log1p(x) - std::log1p(eps * x) / eps);
}

}  // namespace

ContrastQuery::ContrastQuery(GrowthRate x_m_, QIndex q_, Probability p_m_, PeriodCount n_)
    : x_m(x_m_), q(q_), p_m(p_m_), n(n_) {
    if (n.value() < 1.0)
        throw DomainError("contrast query requires n >= 1");
}

double contrast_db(const ContrastQuery& query) {
    return query.p_m.value() *
           contrast_base_db(query.x_m.value(), query.q.value(), query.n.value());
}

double contrast_db_limit(GrowthRate x_m, QIndex q, Probability p_m) {
    const double x = x_m.value();
    if (q.value() - 1.0 < kExponentialLimitSwitch)
        return p_m.value() * -kDbPerNat * (x - std::log1p(x));
    return p_m.value() * kDbPerNat * std::log1p(x);
}

std::optional<std::int64_t> distinguishability_horizon(GrowthRate x_m, QIndex q,
                                                       Probability p_m, double threshold_db,
                                                       std::int64_t cap) {
    detail::require_finite(threshold_db, "threshold");
    if (!(threshold_db > 0.0))
        throw DomainError("distinguishability threshold must be positive");
    if (cap < 1)
        throw DomainError("horizon cap must be >= 1");
    // The contrast increases toward its supremum; if even that stays inside
    // the threshold the horizon is unbounded.
    if (contrast_db_limit(x_m, q, p_m) <= threshold_db)
        return std::nullopt;
    for (std::int64_t n = 1; n <= cap; ++n) {
        const double c = contrast_db(ContrastQuery(x_m, q, p_m, PeriodCount(double(n))));
        if (c > threshold_db)
            return n - 1;
    }
    return std::nullopt;
}

}  // namespace tempodisc
