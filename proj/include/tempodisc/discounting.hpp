#pragma once

#include <vector>

#include "tempodisc/types.hpp"

namespace tempodisc {

// Parameters of the q-exponential discount function
// (W0 + m0)/(M~ + W0) = [e_q^(-rho n)]^(p_m). m0 is the amount already in
// hand at t0, so the factor is exactly 1 at n = 0.
struct DiscountModel {
    DiscountModel(QIndex q, Rate rho, Probability p_m, Wealth w0, double m0 = 0.0);

    QIndex q;
    Rate rho;
    Probability p_m;  // in (0, 1]
    Wealth w0;
    double m0;
};

// M = m0 + (m - m0) n: the later amount that keeps the time averages equal
// grows linearly with the waiting periods. Requires m >= m0.
double linear_amount(const DiscountModel& model, double m, PeriodCount n);

// rho = (m - m0) / (w0 + m0), the per-period discount rate implied by the
// first-period indifference amount m.
Rate per_period_rate(const DiscountModel& model, double m);

// 1 / (1 + rho n); the q = 2, p_m = 1 member of the family.
double hyperbolic_factor(const DiscountModel& model, PeriodCount n);

// [e_q^(-rho n)]^(p_m), equal to (w0 + m0)/(M~ + w0).
double q_discount_factor(const DiscountModel& model, PeriodCount n);

// Expected late amount M~ with the growth expressed through the
// first-period rate x_m: 1 + M~/w0 = [1 + (q-1) x_m n]^(p_m/(q-1)),
// exponential limit exp(p_m x_m n) at q = 1. Excludes m0; the caller adds
// any initial payment.
double expected_amount(const DiscountModel& model, GrowthRate x_m, PeriodCount n);

// Same amount computed from the model's rho instead of x_m, including m0:
// M~ = (w0 + m0)/q_discount_factor - w0, so M~ = m0 at n = 0.
double expected_amount_from_rate(const DiscountModel& model, PeriodCount n);

// Inverts the discount factor back to a per-period rate:
// rho = -(1/n) ln_q ((w0 + m0)/(w0 + m_tilde))^(1/p_m).
// Round-trips with q_discount_factor. Requires n > 0 and m_tilde >= m0.
Rate q_rate(QIndex q, Probability p_m, Wealth w0, double m0, double m_tilde, PeriodCount n);

// Indifference amounts (n, M) tabulated at integer periods; amounts are
// non-decreasing and start at m0.
class IndifferenceSchedule {
public:
    struct Point {
        double n;
        double amount;
    };

    IndifferenceSchedule(std::vector<Point> points, double m0);

    const std::vector<Point>& points() const { return points_; }

    // r = amount(n)/amount(1), the ratio the linear rule fixes at r = n
    // when m0 = 0.
    double ratio_to_first(std::size_t index) const;

private:
    std::vector<Point> points_;
};

// Schedule of linear_amount at n = 0..max_periods.
IndifferenceSchedule linear_schedule(const DiscountModel& model, double m, int max_periods);

}  // namespace tempodisc
