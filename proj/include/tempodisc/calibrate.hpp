#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tempodisc/types.hpp"

namespace tempodisc {

// One observed indifference point: either a discount factor in (0, 1] or a
// raw later amount, at delay n.
struct ObservationRow {
    double n;
    double value;
    bool is_amount = false;
};

// Empirical indifference data normalized to factor space. Amount rows are
// converted via factor = (w0 + m0)/(w0 + amount), which requires a wealth.
class ObservationSet {
public:
    ObservationSet(std::vector<ObservationRow> rows, std::optional<Wealth> w0 = {},
                   double m0 = 0.0);

    const std::vector<double>& periods() const { return periods_; }
    const std::vector<double>& factors() const { return factors_; }
    std::size_t size() const { return periods_.size(); }

private:
    std::vector<double> periods_;
    std::vector<double> factors_;
};

// Search box and grid resolution for the coarse stage.
struct FitBounds {
    double q_min = 1.0;
    double q_max = 5.0;
    double rho_min = 0.0;  // open: the grid starts one step in
    double rho_max = 2.0;
    double pm_min = 0.0;  // open, ditto
    double pm_max = 1.0;
    int grid_points = 64;
};

struct FitOptions {
    bool fit_p_m = false;    // default pins p_m = 1
    bool log_space = false;  // least squares on log factors instead of factors
    FitBounds bounds{};
};

struct FitResult {
    QIndex q;
    Rate rho;
    Probability p_m;
    double sse;
    std::vector<double> residuals;  // observed - model, in the fitted space
    bool converged;
};

// Least-squares fit of [e_q^(-rho n)]^(p_m) to the observed factors.
// Deterministic: coarse grid over the box, then simplex refinement to step
// tolerance 1e-10; ties resolve to the lowest q, then the lowest rho. The
// free-q fit also refines from the pinned q = 1 and q = 2 optima, so its
// SSE never exceeds theirs.
FitResult fit(const ObservationSet& data, const FitOptions& options = {});

// Same engine with q held fixed (q = 1 exponential, q = 2 hyperbolic, ...).
FitResult fit_pinned_q(const ObservationSet& data, QIndex q, const FitOptions& options = {});

struct ModelFit {
    std::string family;  // "exponential", "hyperbolic", "q-exponential"
    FitResult result;
};

// Fits the exponential (q = 1), hyperbolic (q = 2), and free-q models and
// ranks them by SSE, best first.
std::vector<ModelFit> compare_models(const ObservationSet& data, const FitOptions& options = {});

}  // namespace tempodisc
