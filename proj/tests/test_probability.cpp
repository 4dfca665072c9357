#include <doctest.h>

#include <cfloat>
#include <cmath>

#include "tempodisc/probability.hpp"

using namespace tempodisc;

TEST_CASE("uniform cumulative probability follows the piecewise ramp") {
    const auto no_delay = PaymentDistribution::uniform_delay(20.0, 1.0);
    CHECK(no_delay.cumulative(20.0).value() == 1.0);
    CHECK(no_delay.cumulative(25.0).value() == 1.0);
    CHECK(no_delay.cumulative(0.0).value() == 0.0);
    CHECK(no_delay.cumulative(5.0).value() == 0.25);

    const auto delayed = PaymentDistribution::uniform_delay(20.0, 2.0);
    CHECK(delayed.cumulative(1.0).value() == 0.025);
    CHECK(delayed.cumulative(20.0).value() == 0.5);  // scheduled horizon, still waiting
    CHECK(delayed.cumulative(40.0).value() == 1.0);
}

TEST_CASE("degenerate distribution is a step at the pay date") {
    const auto dist = PaymentDistribution::degenerate(5.0);
    CHECK(dist.cumulative(4.999).value() == 0.0);
    CHECK(dist.cumulative(5.0).value() == 1.0);
    CHECK(dist.cumulative(100.0).value() == 1.0);
}

TEST_CASE("first-period probability") {
    CHECK(PaymentDistribution::uniform_delay(20.0, 1.0).first_period().value() == 0.05);
    CHECK(PaymentDistribution::uniform_delay(20.0, 2.0).first_period().value() == 0.025);
    CHECK(PaymentDistribution::degenerate(1.0).first_period().value() == 1.0);
}

TEST_CASE("distribution invariants are enforced") {
    CHECK_THROWS_AS(PaymentDistribution::uniform_delay(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(PaymentDistribution::uniform_delay(20.0, 0.5), DomainError);
    CHECK_THROWS_AS(PaymentDistribution::degenerate(-1.0), DomainError);
    CHECK_THROWS_AS(PaymentDistribution::degenerate(1.0).cumulative(-0.1), DomainError);
}

TEST_CASE("CDFs are monotone and bounded on a dense grid") {
    const PaymentDistribution dists[] = {
        PaymentDistribution::degenerate(7.5),
        PaymentDistribution::uniform_delay(20.0, 1.0),
        PaymentDistribution::uniform_delay(20.0, 3.5),
        PaymentDistribution::uniform_delay(1.0, 1.0),
    };
    for (const auto& dist : dists) {
        double prev = 0.0;
        for (double t = 0.0; t <= 80.0; t += 0.125) {
            const double p = dist.cumulative(t).value();
            CHECK(p >= prev);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            prev = p;
        }
        CHECK(prev == 1.0);
    }
}

TEST_CASE("longer delay windows lower the first-period probability") {
    double prev = 1.0;
    for (double alpha : {1.0, 1.5, 2.0, 4.0, 16.0}) {
        const double p = PaymentDistribution::uniform_delay(20.0, alpha).first_period().value();
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("relative frequency between early and late payments") {
    CHECK(relative_frequency(QIndex(2.0), PeriodCount(10.0)).value == 0.1);
    CHECK(relative_frequency(QIndex(2.0), PeriodCount(1.0)).value == 1.0);
    CHECK(relative_frequency(QIndex(1.5), PeriodCount(4.0)).value == 0.5);
    CHECK_FALSE(relative_frequency(QIndex(1.5), PeriodCount(4.0)).capped);

    CHECK_THROWS_AS(relative_frequency(QIndex(1.0), PeriodCount(5.0)), DomainError);
    CHECK_THROWS_AS(relative_frequency(QIndex(2.0), PeriodCount(0.5)), DomainError);

    const auto capped = relative_frequency(QIndex(1.5), PeriodCount(1.0));
    CHECK(capped.value == 1.0);
    CHECK(capped.capped);
}

TEST_CASE("q = 2 reduces exactly to the 1/n rule") {
    // (1/n)*n drifts off 1 by an ulp for many n, so the exact statement is
    // bit-equality with 1/n plus an epsilon bound on the product.
    long long mismatches = 0;
    long long loose_products = 0;
    for (long long n = 1; n <= 1000000; ++n) {
        const auto rf = relative_frequency(QIndex(2.0), PeriodCount(double(n)));
        if (rf.value != 1.0 / double(n))
            ++mismatches;
        if (std::fabs(rf.value * double(n) - 1.0) > DBL_EPSILON)
            ++loose_products;
    }
    CHECK(mismatches == 0);
    CHECK(loose_products == 0);
}
