#include "tempodisc/discounting.hpp"

#include <cmath>

#include "tempodisc/qmath.hpp"

namespace tempodisc {

DiscountModel::DiscountModel(QIndex q_, Rate rho_, Probability p_m_, Wealth w0_, double m0_)
    : q(q_), rho(rho_), p_m(p_m_), w0(w0_), m0(detail::require_finite(m0_, "m0")) {
    if (!(p_m.value() > 0.0))
        throw DomainError("p_m must be positive");
    if (m0 < 0.0)
        throw DomainError("m0 must be non-negative");
}

double linear_amount(const DiscountModel& model, double m, PeriodCount n) {
    detail::require_finite(m, "m");
    if (m < model.m0)
        throw DomainError("first-period amount must be >= m0");
    return model.m0 + (m - model.m0) * n.value();
}

Rate per_period_rate(const DiscountModel& model, double m) {
    detail::require_finite(m, "m");
    if (m < model.m0)
        throw DomainError("first-period amount must be >= m0");
    return Rate((m - model.m0) / (model.w0.value() + model.m0));
}

double hyperbolic_factor(const DiscountModel& model, PeriodCount n) {
    return 1.0 / (1.0 + model.rho.value() * n.value());
}

double q_discount_factor(const DiscountModel& model, PeriodCount n) {
    const double factor = q_exp(model.q, -(model.rho.value() * n.value()));
    const double pm = model.p_m.value();
    return pm == 1.0 ? factor : std::pow(factor, pm);
}

double expected_amount(const DiscountModel& model, GrowthRate x_m, PeriodCount n) {
    const double qm1 = model.q.value() - 1.0;
    const double pm = model.p_m.value();
    double growth;  // (1 + M~/w0) - 1
    if (qm1 < kExponentialLimitSwitch) {
        growth = std::expm1(pm * x_m.value() * n.value());
    } else {
        const double u = qm1 * x_m.value() * n.value();
        const double exponent = pm / qm1;
        growth = exponent == 1.0 ? u : std::expm1(exponent * std::log1p(u));
    }
    return model.w0.value() * growth;
}

double expected_amount_from_rate(const DiscountModel& model, PeriodCount n) {
    const double factor = q_discount_factor(model, n);
    return (model.w0.value() + model.m0) / factor - model.w0.value();
}

Rate q_rate(QIndex q, Probability p_m, Wealth w0, double m0, double m_tilde, PeriodCount n) {
    detail::require_finite(m0, "m0");
    detail::require_finite(m_tilde, "m_tilde");
    if (m0 < 0.0)
        throw DomainError("m0 must be non-negative");
    if (!(p_m.value() > 0.0))
        throw DomainError("p_m must be positive");
    if (!(n.value() > 0.0))
        throw DomainError("q_rate requires n > 0");
    if (m_tilde < m0)
        throw DomainError("q_rate requires m_tilde >= m0");
    const double ratio = (w0.value() + m0) / (w0.value() + m_tilde);
    const double base = p_m.value() == 1.0 ? ratio : std::pow(ratio, 1.0 / p_m.value());
    double rho = -q_log(q, base) / n.value();
    if (rho == 0.0)
        rho = 0.0;  // normalize -0.0 from the m_tilde == m0 case
    return Rate(rho);
}

IndifferenceSchedule::IndifferenceSchedule(std::vector<Point> points, double m0)
    : points_(std::move(points)) {
    if (points_.empty())
        throw DomainError("schedule must have at least one point");
    double prev_n = -1.0;
    double prev_amount = -1.0;
    for (const auto& p : points_) {
        detail::require_finite(p.n, "schedule n");
        detail::require_finite(p.amount, "schedule amount");
        if (p.n <= prev_n)
            throw DomainError("schedule periods must be strictly increasing");
        if (p.amount < prev_amount)
            throw DomainError("schedule amounts must be non-decreasing");
        prev_n = p.n;
        prev_amount = p.amount;
    }
    if (points_.front().n == 0.0 && points_.front().amount != m0)
        throw DomainError("schedule amount at n = 0 must equal m0");
}

double IndifferenceSchedule::ratio_to_first(std::size_t index) const {
    if (index >= points_.size())
        throw DomainError("schedule index out of range");
    const Point* first = nullptr;
    for (const auto& p : points_) {
        if (p.n == 1.0) {
            first = &p;
            break;
        }
    }
    if (first == nullptr || first->amount == 0.0)
        throw DomainError("schedule has no usable first-period amount");
    return points_[index].amount / first->amount;
}

IndifferenceSchedule linear_schedule(const DiscountModel& model, double m, int max_periods) {
    if (max_periods < 1)
        throw DomainError("schedule horizon must be >= 1");
    std::vector<IndifferenceSchedule::Point> points;
    points.reserve(static_cast<std::size_t>(max_periods) + 1);
    for (int n = 0; n <= max_periods; ++n)
        points.push_back({static_cast<double>(n), linear_amount(model, m, PeriodCount(n))});
    return IndifferenceSchedule(std::move(points), model.m0);
}

}  // namespace tempodisc
