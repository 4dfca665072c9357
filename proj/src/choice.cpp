#include "tempodisc/choice.hpp"

#include <cmath>

#include "tempodisc/qmath.hpp"

namespace tempodisc {

ChoiceProblem::ChoiceProblem(Wealth wealth_, double early_amount_, double late_amount_,
                             Probability p_early_, Probability p_late_)
    : wealth(wealth_),
      early_amount(detail::require_finite(early_amount_, "early amount")),
      late_amount(detail::require_finite(late_amount_, "late amount")),
      p_early(p_early_),
      p_late(p_late_) {
    if (early_amount < 0.0)
        throw DomainError("early amount must be non-negative");
    if (late_amount < early_amount)
        throw DomainError("late amount must be >= early amount");
}

const char* side_name(PreferredSide side) {
    switch (side) {
        case PreferredSide::Early: return "Early";
        case PreferredSide::Late: return "Late";
        default: return "Indifferent";
    }
}

GrowthRate growth_rate(double amount, Wealth wealth) {
    detail::require_finite(amount, "amount");
    if (amount < 0.0)
        throw DomainError("amount must be non-negative");
    return GrowthRate(amount / wealth.value());
}

TimeAverage time_average(GrowthRate x, Probability p) {
    return TimeAverage(pow1p(x.value(), p.value()));
}

Preference decide(const ChoiceProblem& problem, double indifference_threshold_db) {
    detail::require_finite(indifference_threshold_db, "indifference threshold");
    if (indifference_threshold_db < 0.0)
        throw DomainError("indifference threshold must be non-negative");

    const TimeAverage g_early =
        time_average(growth_rate(problem.early_amount, problem.wealth), problem.p_early);
    const TimeAverage g_late =
        time_average(growth_rate(problem.late_amount, problem.wealth), problem.p_late);

    const double contrast_db =
        std::fabs(20.0 * std::log10(g_late.value() / g_early.value()));

    PreferredSide side = PreferredSide::Indifferent;
    if (contrast_db > indifference_threshold_db)
        side = g_late.value() > g_early.value() ? PreferredSide::Late : PreferredSide::Early;

    const TimeAverage decision =
        g_late.value() > g_early.value() ? g_late : g_early;
    return {side, contrast_db, decision, g_early, g_late};
}

}  // namespace tempodisc
