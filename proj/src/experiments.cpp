#include "tempodisc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tempodisc/discounting.hpp"

namespace tempodisc {

namespace {

void validate_scenario(const ThalerScenario& s) {
    if (s.prizes.empty())
        throw DomainError("scenario needs at least one prize");
    for (double prize : s.prizes) {
        detail::require_finite(prize, "prize");
        if (!(prize > 0.0))
            throw DomainError("prizes must be positive");
    }
    if (s.horizons.empty())
        throw DomainError("scenario needs at least one horizon");
    double prev = 0.0;
    for (const auto& h : s.horizons) {
        detail::require_finite(h.n, "horizon");
        if (!(h.n > prev))
            throw DomainError("horizons must be positive and strictly increasing");
        prev = h.n;
    }
    if (!s.observed.empty()) {
        if (s.observed.size() != s.prizes.size())
            throw DomainError("observed responses must match the prize count");
        for (const auto& per_prize : s.observed)
            if (per_prize.size() != s.horizons.size())
                throw DomainError("observed responses must match the horizon count");
    }
}

}  // namespace

ThalerTable simulate_discounter(const ThalerScenario& scenario,
                                const std::vector<double>& first_period_amounts) {
    validate_scenario(scenario);
    if (first_period_amounts.size() != scenario.prizes.size())
        throw DomainError("one first-period amount per prize is required");

    ThalerTable table;
    table.reserve(scenario.prizes.size() * scenario.horizons.size());
    for (std::size_t i = 0; i < scenario.prizes.size(); ++i) {
        const double m0 = scenario.prizes[i];
        const double m = first_period_amounts[i];
        if (!std::isfinite(m) || m < m0)
            throw DomainError("first-period amount must be >= its prize");
        const DiscountModel model(scenario.q, Rate((m - m0) / (scenario.w0.value() + m0)),
                                  scenario.p_m, scenario.w0, m0);
        for (std::size_t j = 0; j < scenario.horizons.size(); ++j) {
            const Horizon& h = scenario.horizons[j];
            const double amount = linear_amount(model, m, PeriodCount(h.n));
            const Rate rate = q_rate(scenario.q, scenario.p_m, scenario.w0, m0, amount,
                                     PeriodCount(h.n));
            std::optional<double> observed;
            if (!scenario.observed.empty())
                observed = scenario.observed[i][j];
            table.push_back({m0, h.label, h.n, amount, rate.value(), observed});
        }
    }
    return table;
}

MagnitudeReport magnitude_effect(std::vector<std::pair<double, double>> prize_rates) {
    if (prize_rates.size() < 2)
        throw DomainError("magnitude effect needs at least two prizes");
    std::sort(prize_rates.begin(), prize_rates.end());

    bool increasing = true;
    bool decreasing = true;
    bool flat = true;
    for (std::size_t i = 1; i < prize_rates.size(); ++i) {
        const double prev = prize_rates[i - 1].second;
        const double cur = prize_rates[i].second;
        increasing = increasing && cur > prev;
        decreasing = decreasing && cur < prev;
        flat = flat && cur == prev;
    }

    MagnitudePattern pattern = MagnitudePattern::Mixed;
    std::string description = "mixed";
    if (flat) {
        pattern = MagnitudePattern::Flat;
        description = "flat";
    } else if (increasing) {
        pattern = MagnitudePattern::ReversedIncreasing;
        description = "reversed: increasing";
    } else if (decreasing) {
        pattern = MagnitudePattern::Classical;
        description = "classical magnitude effect";
    }
    return {pattern, std::move(description), std::move(prize_rates)};
}

MagnitudeReport magnitude_effect(const ThalerTable& table) {
    std::vector<std::pair<double, double>> prize_rates;
    for (const auto& row : table) {
        const auto it = std::find_if(prize_rates.begin(), prize_rates.end(),
                                     [&](const auto& pr) { return pr.first == row.prize; });
        if (it == prize_rates.end())
            prize_rates.emplace_back(row.prize, row.rate);
    }
    return magnitude_effect(std::move(prize_rates));
}

std::vector<double> sample_wealth(const ParetoWealth& population) {
    if (std::isnan(population.exponent) || !(population.exponent > 1.0))
        throw DomainError("Pareto exponent must exceed 1");
    detail::require_finite(population.w_min, "w_min");
    if (!(population.w_min > 0.0))
        throw DomainError("w_min must be positive");
    if (population.sample_size < 1)
        throw DomainError("sample size must be >= 1");

    std::mt19937_64 gen(population.seed);
    const double inv_exponent = 1.0 / population.exponent;  // 0 for +inf: degenerate at w_min
    std::vector<double> wealth(population.sample_size);
    for (double& w : wealth) {
        // 53-bit uniform in [0, 1); 1 - u is in (0, 1], so the draw is finite.
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        w = population.w_min * std::pow(1.0 - u, -inv_exponent);
    }
    return wealth;
}

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
    if (sorted.size() == 1)
        return sorted.front();
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size())
        return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

DispersionSummary population_dispersion(const ParetoWealth& population, double m0, double m) {
    detail::require_finite(m0, "m0");
    detail::require_finite(m, "m");
    if (m0 < 0.0)
        throw DomainError("m0 must be non-negative");
    if (m < m0)
        throw DomainError("m must be >= m0");

    const std::vector<double> wealth = sample_wealth(population);
    std::vector<double> rates(wealth.size());
    for (std::size_t i = 0; i < wealth.size(); ++i)
        rates[i] = (m - m0) / (wealth[i] + m0);

    double sum = 0.0;  // sequential sum keeps the summary bit-reproducible
    for (double r : rates)
        sum += r;
    std::sort(rates.begin(), rates.end());

    return {rates.size(),
            sum / static_cast<double>(rates.size()),
            rates.front(),
            interpolated_quantile(rates, 0.25),
            interpolated_quantile(rates, 0.5),
            interpolated_quantile(rates, 0.75),
            rates.back()};
}

}  // namespace tempodisc
