#include <doctest.h>

#include <cmath>
#include <random>

#include "tempodisc/calibrate.hpp"
#include "tempodisc/discounting.hpp"

using namespace tempodisc;

namespace {

ObservationSet synthetic_factors(double q, double rho, double pm, int n_max,
                                 std::uint64_t noise_seed = 0, double noise_level = 0.0) {
    const DiscountModel model(QIndex(q), Rate(rho), Probability(pm), Wealth(1.0));
    std::mt19937_64 gen(noise_seed);
    std::vector<ObservationRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        double factor = q_discount_factor(model, PeriodCount(double(n)));
        if (noise_level > 0.0) {
            const double u = 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
            factor = std::min(1.0, factor * (1.0 + noise_level * u));
        }
        rows.push_back({double(n), factor, false});
    }
    return ObservationSet(std::move(rows));
}

}  // namespace

TEST_CASE("noiseless hyperbolic data is recovered") {
    const ObservationSet data = synthetic_factors(2.0, 0.1, 1.0, 20);
    const FitResult result = fit(data);
    CHECK(std::fabs(result.q.value() - 2.0) <= 1e-2);
    CHECK(std::fabs(result.rho.value() - 0.1) <= 1e-3);
    CHECK(result.p_m.value() == 1.0);
    CHECK(result.converged);
}

TEST_CASE("nearly exponential data lands at the q = 1 boundary") {
    const ObservationSet data = synthetic_factors(1.0 + 1e-9, 0.05, 1.0, 20);
    const FitResult result = fit(data);
    CHECK(result.q.value() <= 1.05);
    CHECK(std::fabs(result.rho.value() - 0.05) <= 1e-3);
}

TEST_CASE("data problems are reported as such") {
    CHECK_THROWS_AS(ObservationSet({{1.0, 0.9, false}, {2.0, 0.8, false}}), DataError);
    CHECK_THROWS_AS(
        ObservationSet({{5.0, 0.9, false}, {5.0, 0.8, false}, {5.0, 0.7, false}}), DataError);
    CHECK_THROWS_AS(
        ObservationSet({{1.0, 1.2, false}, {2.0, 0.8, false}, {3.0, 0.7, false}}), DataError);
    CHECK_THROWS_AS(
        ObservationSet({{1.0, 1000.0, true}, {2.0, 2000.0, true}, {3.0, 3000.0, true}}),
        DataError);

    const ObservationSet ones({{1.0, 1.0, false}, {2.0, 1.0, false}, {3.0, 1.0, false}});
    CHECK_THROWS_AS(fit(ones), DataError);
    CHECK_THROWS_AS(compare_models(ones), DataError);
}

TEST_CASE("amount rows are fitted through factor conversion") {
    const double w0 = 100000.0;
    const DiscountModel model(QIndex(2.0), Rate(0.05), Probability(1.0), Wealth(w0));
    std::vector<ObservationRow> amount_rows;
    std::vector<ObservationRow> factor_rows;
    for (int n = 1; n <= 12; ++n) {
        const double factor = q_discount_factor(model, PeriodCount(double(n)));
        factor_rows.push_back({double(n), factor, false});
        amount_rows.push_back({double(n), w0 / factor - w0, true});
    }
    const FitResult from_amounts = fit(ObservationSet(amount_rows, Wealth(w0)));
    const FitResult from_factors = fit(ObservationSet(factor_rows));
    CHECK(std::fabs(from_amounts.q.value() - from_factors.q.value()) <= 1e-6);
    CHECK(std::fabs(from_amounts.rho.value() - from_factors.rho.value()) <= 1e-8);
}

TEST_CASE("free q never ranks behind the pinned families") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double q = 1.0 + 3.0 * unit(gen);
        const double rho = 0.02 + 0.4 * unit(gen);
        const ObservationSet data =
            synthetic_factors(q, rho, 1.0, 15, 1000 + trial, 0.02 * unit(gen));
        const double sse_free = fit(data).sse;
        const double sse_exp = fit_pinned_q(data, QIndex(1.0)).sse;
        const double sse_hyp = fit_pinned_q(data, QIndex(2.0)).sse;
        CHECK(sse_free <= sse_exp + 1e-12);
        CHECK(sse_free <= sse_hyp + 1e-12);
    }
}

TEST_CASE("identical inputs give bit-identical fits") {
    const ObservationSet data = synthetic_factors(2.4, 0.07, 1.0, 18, 55, 0.01);
    const FitResult a = fit(data);
    const FitResult b = fit(data);
    CHECK(a.q.value() == b.q.value());
    CHECK(a.rho.value() == b.rho.value());
    CHECK(a.sse == b.sse);
    REQUIRE(a.residuals.size() == b.residuals.size());
    for (std::size_t i = 0; i < a.residuals.size(); ++i)
        CHECK(a.residuals[i] == b.residuals[i]);
}

TEST_CASE("sse equals the sum of squared residuals") {
    const ObservationSet data = synthetic_factors(1.8, 0.12, 1.0, 16, 9, 0.005);
    for (const auto& result : {fit(data), fit_pinned_q(data, QIndex(2.0))}) {
        double sum = 0.0;
        for (double r : result.residuals)
            sum += r * r;
        CHECK(result.sse == doctest::Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("model comparison ranks the generating family first") {
    const ObservationSet hyper_data = synthetic_factors(2.0, 0.08, 1.0, 20);
    const auto hyper_ranked = compare_models(hyper_data);
    CHECK(hyper_ranked.front().result.sse <= hyper_ranked.back().result.sse);
    double hyper_sse = -1.0, free_sse = -1.0, exp_sse = -1.0;
    for (const auto& m : hyper_ranked) {
        if (m.family == "hyperbolic") hyper_sse = m.result.sse;
        if (m.family == "q-exponential") free_sse = m.result.sse;
        if (m.family == "exponential") exp_sse = m.result.sse;
    }
    CHECK(std::fabs(hyper_sse - free_sse) <= 1e-12);  // tie at the top
    CHECK(exp_sse > hyper_sse + 1e-6);

    const ObservationSet exp_data = synthetic_factors(1.0, 0.08, 1.0, 20);
    double exp2_sse = -1.0, free2_sse = -1.0;
    for (const auto& m : compare_models(exp_data)) {
        if (m.family == "exponential") exp2_sse = m.result.sse;
        if (m.family == "q-exponential") free2_sse = m.result.sse;
    }
    CHECK(std::fabs(exp2_sse - free2_sse) <= 1e-12);
}

TEST_CASE("rho survives one percent multiplicative noise") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const ObservationSet data = synthetic_factors(2.0, 0.1, 1.0, 20, seed, 0.01);
        const FitResult result = fit(data);
        CHECK(std::fabs(result.rho.value() - 0.1) <= 0.005);
    }
}

TEST_CASE("log-space loss recovers the same parameters on clean data") {
    const ObservationSet data = synthetic_factors(2.0, 0.1, 1.0, 20);
    FitOptions options;
    options.log_space = true;
    const FitResult result = fit(data, options);
    CHECK(std::fabs(result.q.value() - 2.0) <= 1e-2);
    CHECK(std::fabs(result.rho.value() - 0.1) <= 1e-3);
}

TEST_CASE("p_m can be freed") {
    const ObservationSet data = synthetic_factors(2.0, 0.1, 0.8, 20);
    FitOptions options;
    options.fit_p_m = true;
    const FitResult result = fit(data, options);
    // q, rho, p_m trade off against each other; the fit itself must be tight.
    CHECK(result.sse <= 1e-8);
    CHECK(result.p_m.value() <= 1.0);
    CHECK(result.p_m.value() > 0.0);
}
