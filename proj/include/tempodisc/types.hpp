#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace tempodisc {

// Violation of a numeric domain or type invariant (q < 1, zero wealth, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Problem with a user-supplied dataset (too few rows, degenerate values,
// unreadable files). The CLI maps these to a distinct exit code.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw DomainError(std::string(name) + " must be finite");
    return v;
}

}  // namespace detail

// Entropic index of the q-exponential family: q = 1 is the exponential
// limit, q = 2 the hyperbolic case. Values below 1 are rejected outright
// instead of clamped; the discount family is only defined for q >= 1.
class QIndex {
public:
    explicit QIndex(double q) : q_(detail::require_finite(q, "q")) {
        if (q_ < 1.0)
            throw DomainError("q must be >= 1");
    }
    double value() const { return q_; }

private:
    double q_;
};

// Per-period discount rate, rho >= 0.
class Rate {
public:
    explicit Rate(double rho) : rho_(detail::require_finite(rho, "rate")) {
        if (rho_ < 0.0)
            throw DomainError("rate must be non-negative");
    }
    double value() const { return rho_; }

private:
    double rho_;
};

// Number of short periods. Real-valued so curves can be sampled between
// the integer decision points.
class PeriodCount {
public:
    explicit PeriodCount(double n) : n_(detail::require_finite(n, "period count")) {
        if (n_ < 0.0)
            throw DomainError("period count must be non-negative");
    }
    double value() const { return n_; }

private:
    double n_;
};

// Payment probability at the end of the first period. Interpreted as the
// stationary frequency with which the payment hypothesis comes true when
// the exposure is repeated indefinitely.
class Probability {
public:
    explicit Probability(double p) : p_(detail::require_finite(p, "probability")) {
        if (p_ < 0.0 || p_ > 1.0)
            throw DomainError("probability must lie in [0, 1]");
    }
    double value() const { return p_; }

private:
    double p_;
};

// Personal wealth at decision time, strictly positive.
class Wealth {
public:
    explicit Wealth(double w0) : w0_(detail::require_finite(w0, "wealth")) {
        if (w0_ <= 0.0)
            throw DomainError("wealth must be positive");
    }
    double value() const { return w0_; }

private:
    double w0_;
};

// Relative impact of a payment on wealth, x = amount / wealth >= 0.
class GrowthRate {
public:
    explicit GrowthRate(double x) : x_(detail::require_finite(x, "growth rate")) {
        if (x_ < 0.0)
            throw DomainError("growth rate must be non-negative");
    }
    double value() const { return x_; }

private:
    double x_;
};

// Per-period growth factor g = (1 + X)^p of a repeatedly faced risky
// payment; g >= 1 whenever payments are non-negative. The certainty
// equivalent rate of the quasi-deterministic hypothesis is g - 1.
class TimeAverage {
public:
    explicit TimeAverage(double g) : g_(detail::require_finite(g, "time average")) {
        if (g_ < 1.0)
            throw DomainError("time average must be >= 1");
    }
    double value() const { return g_; }
    double rate() const { return g_ - 1.0; }

private:
    double g_;
};

}  // namespace tempodisc
