#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "tempodisc/experiments.hpp"

using namespace tempodisc;

namespace {

ThalerScenario two_prize_scenario() {
    return ThalerScenario{Wealth(100000.0),
                          QIndex(2.0),
                          Probability(1.0),
                          {250.0, 3000.0},
                          {{"3 months", 0.25}, {"1 year", 1.0}, {"3 years", 3.0}},
                          {}};
}

double rel_err(double actual, double expected) {
    return std::fabs(actual - expected) / std::fabs(expected);
}

}  // namespace

TEST_CASE("simulated discounter reports one constant rate per prize") {
    const ThalerScenario scenario = two_prize_scenario();
    // Increments reverse-derived from the documented per-period rates.
    const double m1 = 250.0 + 0.0081 * 100250.0;
    const double m2 = 3000.0 + 0.0769 * 103000.0;
    const ThalerTable table = simulate_discounter(scenario, {m1, m2});
    REQUIRE(table.size() == 6);
    for (const auto& row : table) {
        const double target = row.prize == 250.0 ? 0.0081 : 0.0769;
        CHECK(rel_err(row.rate, target) <= 1e-12);
        CHECK(row.amount >= row.prize);
    }
    CHECK(table[0].horizon_label == "3 months");
    CHECK(table[0].n == 0.25);

    const MagnitudeReport report = magnitude_effect(table);
    CHECK(report.pattern == MagnitudePattern::ReversedIncreasing);
    CHECK(report.description == "reversed: increasing");
}

TEST_CASE("zero increment means no time preference") {
    const ThalerScenario scenario = two_prize_scenario();
    const ThalerTable table = simulate_discounter(scenario, {250.0, 3000.0});
    for (const auto& row : table) {
        CHECK(row.amount == row.prize);
        CHECK(row.rate == 0.0);
    }
    CHECK(magnitude_effect(table).description == "flat");
}

TEST_CASE("magnitude patterns") {
    CHECK(magnitude_effect({{250.0, 0.0081}, {3000.0, 0.0769}}).description ==
          "reversed: increasing");
    CHECK(magnitude_effect({{250.0, 0.05}, {3000.0, 0.05}}).description == "flat");
    CHECK(magnitude_effect({{250.0, 0.73}, {3000.0, 0.62}}).description ==
          "classical magnitude effect");
    CHECK(magnitude_effect({{1.0, 0.1}, {2.0, 0.3}, {3.0, 0.2}}).pattern ==
          MagnitudePattern::Mixed);
    CHECK_THROWS_AS(magnitude_effect({{250.0, 0.0081}}), DomainError);
}

TEST_CASE("scenario validation") {
    ThalerScenario bad = two_prize_scenario();
    bad.horizons = {{"1 year", 1.0}, {"6 months", 0.5}};
    CHECK_THROWS_AS(simulate_discounter(bad, {300.0, 3100.0}), DomainError);
    CHECK_THROWS_AS(simulate_discounter(two_prize_scenario(), {300.0}), DomainError);
    CHECK_THROWS_AS(simulate_discounter(two_prize_scenario(), {100.0, 3100.0}), DomainError);
}

TEST_CASE("observed responses ride along") {
    ThalerScenario scenario = two_prize_scenario();
    scenario.observed = {{300.0, 400.0, 1000.0}, {3500.0, 4000.0, 6000.0}};
    const ThalerTable table = simulate_discounter(scenario, {300.0, 3100.0});
    REQUIRE(table[0].observed.has_value());
    CHECK(*table[0].observed == 300.0);
    CHECK(*table[5].observed == 6000.0);
}

TEST_CASE("wealth sampling is seeded and reproducible") {
    const ParetoWealth population{1.5, 10000.0, 5000, 99};
    const auto a = sample_wealth(population);
    const auto b = sample_wealth(population);
    REQUIRE(a.size() == 5000);
    CHECK(a == b);
    for (double w : a)
        CHECK(w >= 10000.0);
    CHECK(sample_wealth({1.5, 10000.0, 5000, 100}) != a);
}

TEST_CASE("an infinite tail index degenerates to equal wealth") {
    const ParetoWealth degenerate{std::numeric_limits<double>::infinity(), 10000.0, 1000, 7};
    for (double w : sample_wealth(degenerate))
        CHECK(w == 10000.0);
    const DispersionSummary summary = population_dispersion(degenerate, 0.0, 100.0);
    CHECK(summary.iqr() == 0.0);
    CHECK(summary.min == summary.max);
}

TEST_CASE("population dispersion of discount rates") {
    const ParetoWealth population{1.5, 10000.0, 100000, 1234};
    const DispersionSummary summary = population_dispersion(population, 0.0, 100.0);

    CHECK(summary.size == 100000);
    CHECK(summary.iqr() > 0.0);
    CHECK(summary.min > 0.0);
    CHECK(summary.q25 <= summary.median);
    CHECK(summary.median <= summary.q75);

    // Independent replication: same seed, inverse CDF written out directly.
    std::mt19937_64 gen(1234);
    std::vector<double> rates(100000);
    double wealth_sum = 0.0;
    for (double& r : rates) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        const double w = 10000.0 * std::pow(1.0 - u, -1.0 / 1.5);
        wealth_sum += w;
        r = 100.0 / w;
    }
    std::sort(rates.begin(), rates.end());
    CHECK(rates[49999] + 0.5 * (rates[50000] - rates[49999]) ==
          doctest::Approx(summary.median).epsilon(1e-15));

    // Heavy tail: the median individual is poorer than the mean individual,
    // so the median rate exceeds the rate at the mean wealth.
    const double mean_wealth = wealth_sum / 100000.0;
    CHECK(summary.median > 100.0 / mean_wealth);
}

TEST_CASE("rates fall as sampled wealth grows") {
    const ParetoWealth population{1.5, 10000.0, 20000, 77};
    auto wealth = sample_wealth(population);
    std::sort(wealth.begin(), wealth.end());
    double prev = std::numeric_limits<double>::infinity();
    for (double w : wealth) {
        const double rho = 100.0 / (w + 250.0);
        CHECK(rho <= prev);
        prev = rho;
    }
}

TEST_CASE("zero increment and bad inputs") {
    const ParetoWealth population{1.5, 10000.0, 100, 5};
    const DispersionSummary summary = population_dispersion(population, 250.0, 250.0);
    CHECK(summary.min == 0.0);
    CHECK(summary.max == 0.0);

    CHECK_THROWS_AS(population_dispersion(population, 300.0, 200.0), DomainError);
    CHECK_THROWS_AS(sample_wealth({1.0, 10000.0, 10, 1}), DomainError);
    CHECK_THROWS_AS(sample_wealth({1.5, 0.0, 10, 1}), DomainError);
    CHECK_THROWS_AS(sample_wealth({1.5, 10000.0, 0, 1}), DomainError);
}
