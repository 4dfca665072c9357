#include "tempodisc/calibrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "tempodisc/discounting.hpp"
#include "tempodisc/qmath.hpp"

namespace tempodisc {

namespace {

constexpr double kSimplexStepTol = 1e-10;
constexpr int kSimplexMaxIter = 4000;

double model_factor(double q, double rho, double pm, double n) {
    const double factor = q_exp(QIndex(q), -(rho * n));
    return pm == 1.0 ? factor : std::pow(factor, pm);
}

struct Objective {
    const ObservationSet& data;
    bool log_space;

    double operator()(double q, double rho, double pm) const {
        double sse = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double predicted = model_factor(q, rho, pm, data.periods()[i]);
            const double r = log_space
                                 ? std::log(data.factors()[i]) - std::log(predicted)
                                 : data.factors()[i] - predicted;
            sse += r * r;
        }
        return sse;
    }
};

struct Params {
    double q;
    double rho;
    double pm;
};

// Free coordinates of the search: q (unless pinned), rho, p_m (if fitted).
struct ParamSpace {
    std::optional<double> pinned_q;
    bool fit_pm;
    FitBounds bounds;

    int dims() const { return (pinned_q ? 0 : 1) + 1 + (fit_pm ? 1 : 0); }

    Params unpack(const std::vector<double>& x) const {
        Params p{};
        int i = 0;
        p.q = pinned_q ? *pinned_q : x[i++];
        p.rho = x[i++];
        p.pm = fit_pm ? x[i++] : 1.0;
        return p;
    }

    std::vector<double> pack(const Params& p) const {
        std::vector<double> x;
        if (!pinned_q)
            x.push_back(p.q);
        x.push_back(p.rho);
        if (fit_pm)
            x.push_back(p.pm);
        return x;
    }

    void clamp(std::vector<double>& x) const {
        int i = 0;
        if (!pinned_q) {
            x[i] = std::clamp(x[i], bounds.q_min, bounds.q_max);
            ++i;
        }
        // rho and p_m boxes are open below; pin the clamp just inside.
        x[i] = std::clamp(x[i], std::max(bounds.rho_min, 0.0), bounds.rho_max);
        ++i;
        if (fit_pm)
            x[i] = std::clamp(x[i], std::max(bounds.pm_min, 1e-6), bounds.pm_max);
    }

    double step(int axis) const {
        int i = 0;
        if (!pinned_q) {
            if (axis == i)
                return (bounds.q_max - bounds.q_min) / (2.0 * bounds.grid_points);
            ++i;
        }
        if (axis == i)
            return (bounds.rho_max - bounds.rho_min) / (2.0 * bounds.grid_points);
        ++i;
        return (bounds.pm_max - bounds.pm_min) / (2.0 * bounds.grid_points);
    }
};

double evaluate(const Objective& f, const ParamSpace& space, const std::vector<double>& x) {
    const Params p = space.unpack(x);
    return f(p.q, p.rho, p.pm);
}

// Deterministic Nelder-Mead with box clamping. The best vertex never gets
// worse, so seeding with a known optimum can only improve on it.
struct SimplexOutcome {
    std::vector<double> x;
    double value;
    bool converged;
};

SimplexOutcome nelder_mead(const Objective& f, const ParamSpace& space,
                           std::vector<double> start) {
    const int d = space.dims();
    space.clamp(start);

    std::vector<std::vector<double>> vertex(d + 1, start);
    for (int i = 0; i < d; ++i) {
        vertex[i + 1][i] += space.step(i);
        space.clamp(vertex[i + 1]);
        if (vertex[i + 1] == vertex[0]) {  // clamped back onto the start
            vertex[i + 1][i] -= 2.0 * space.step(i);
            space.clamp(vertex[i + 1]);
        }
    }
    std::vector<double> value(d + 1);
    for (int i = 0; i <= d; ++i)
        value[i] = evaluate(f, space, vertex[i]);

    std::vector<int> order(d + 1);
    bool converged = false;
    for (int iter = 0; iter < kSimplexMaxIter; ++iter) {
        for (int i = 0; i <= d; ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return value[a] < value[b]; });

        double spread = 0.0;
        for (int i = 0; i < d; ++i)
            spread = std::max(spread, std::fabs(vertex[order[d]][i] - vertex[order[0]][i]));
        if (spread < kSimplexStepTol) {
            converged = true;
            break;
        }

        const int worst = order[d];
        std::vector<double> centroid(d, 0.0);
        for (int i = 0; i <= d; ++i) {
            if (i == worst)
                continue;
            for (int k = 0; k < d; ++k)
                centroid[k] += vertex[i][k];
        }
        for (int k = 0; k < d; ++k)
            centroid[k] /= d;

        auto blend = [&](double coeff) {
            std::vector<double> x(d);
            for (int k = 0; k < d; ++k)
                x[k] = centroid[k] + coeff * (vertex[worst][k] - centroid[k]);
            space.clamp(x);
            return x;
        };

        const std::vector<double> reflected = blend(-1.0);
        const double f_reflected = evaluate(f, space, reflected);
        const double f_best = value[order[0]];
        const double f_second_worst = value[order[d - 1]];

        if (f_reflected < f_best) {
            const std::vector<double> expanded = blend(-2.0);
            const double f_expanded = evaluate(f, space, expanded);
            if (f_expanded < f_reflected) {
                vertex[worst] = expanded;
                value[worst] = f_expanded;
            } else {
                vertex[worst] = reflected;
                value[worst] = f_reflected;
            }
        } else if (f_reflected < f_second_worst) {
            vertex[worst] = reflected;
            value[worst] = f_reflected;
        } else {
            const bool outside = f_reflected < value[worst];
            const std::vector<double> contracted = blend(outside ? -0.5 : 0.5);
            const double f_contracted = evaluate(f, space, contracted);
            if (f_contracted < std::min(f_reflected, value[worst])) {
                vertex[worst] = contracted;
                value[worst] = f_contracted;
            } else {
                // Shrink toward the best vertex.
                for (int i = 0; i <= d; ++i) {
                    if (i == order[0])
                        continue;
                    for (int k = 0; k < d; ++k)
                        vertex[i][k] = vertex[order[0]][k] + 0.5 * (vertex[i][k] - vertex[order[0]][k]);
                    space.clamp(vertex[i]);
                    value[i] = evaluate(f, space, vertex[i]);
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= d; ++i)
        if (value[i] < value[best])
            best = i;
    return {vertex[best], value[best], converged};
}

// Grid values along one axis; lo is excluded when open (rho, p_m).
std::vector<double> axis_grid(double lo, double hi, int points, bool open_low) {
    std::vector<double> g;
    g.reserve(points);
    if (open_low) {
        const double step = (hi - lo) / points;
        for (int i = 1; i <= points; ++i)
            g.push_back(lo + step * i);
    } else {
        const double step = (hi - lo) / (points - 1);
        for (int i = 0; i < points; ++i)
            g.push_back(i + 1 == points ? hi : lo + step * i);
    }
    return g;
}

FitResult make_result(const Objective& f, const ParamSpace& space, const SimplexOutcome& out) {
    const Params p = space.unpack(out.x);
    std::vector<double> residuals(f.data.size());
    double sse = 0.0;
    for (std::size_t i = 0; i < f.data.size(); ++i) {
        const double predicted = model_factor(p.q, p.rho, p.pm, f.data.periods()[i]);
        residuals[i] = f.log_space ? std::log(f.data.factors()[i]) - std::log(predicted)
                                   : f.data.factors()[i] - predicted;
        sse += residuals[i] * residuals[i];
    }
    return {QIndex(p.q), Rate(p.rho), Probability(p.pm), sse, std::move(residuals),
            out.converged};
}

SimplexOutcome run_stage(const Objective& f, const ParamSpace& space) {
    const FitBounds& b = space.bounds;
    const std::vector<double> q_grid =
        space.pinned_q ? std::vector<double>{*space.pinned_q}
                       : axis_grid(b.q_min, b.q_max, b.grid_points, false);
    const std::vector<double> rho_grid = axis_grid(b.rho_min, b.rho_max, b.grid_points, true);
    const std::vector<double> pm_grid =
        space.fit_pm ? axis_grid(b.pm_min, b.pm_max, b.grid_points, true)
                     : std::vector<double>{1.0};

    // Strict improvement keeps the first point scanned among ties, and the
    // loops ascend, so ties resolve to lowest q then lowest rho.
    Params best{};
    double best_sse = std::numeric_limits<double>::infinity();
    for (double q : q_grid)
        for (double rho : rho_grid)
            for (double pm : pm_grid) {
                const double sse = f(q, rho, pm);
                if (sse < best_sse) {
                    best_sse = sse;
                    best = {q, rho, pm};
                }
            }

    return nelder_mead(f, space, space.pack(best));
}

FitResult fit_impl(const ObservationSet& data, const FitOptions& options,
                   std::optional<double> pinned_q) {
    bool all_ones = true;
    for (double factor : data.factors())
        all_ones = all_ones && factor == 1.0;
    if (all_ones)
        throw DataError("degenerate observations: every factor equals 1");

    const Objective f{data, options.log_space};
    const ParamSpace space{pinned_q, options.fit_p_m, options.bounds};

    SimplexOutcome best = run_stage(f, space);
    if (!pinned_q) {
        // Re-refine from the pinned-family optima so the free fit can never
        // rank behind a nested model.
        for (double q0 : std::array<double, 2>{1.0, 2.0}) {
            const ParamSpace pinned_space{q0, options.fit_p_m, options.bounds};
            const SimplexOutcome pinned = run_stage(f, pinned_space);
            const Params p = pinned_space.unpack(pinned.x);
            SimplexOutcome seeded = nelder_mead(f, space, space.pack(p));
            if (seeded.value < best.value)
                best = std::move(seeded);
        }
    }
    return make_result(f, space, best);
}

}  // namespace

ObservationSet::ObservationSet(std::vector<ObservationRow> rows, std::optional<Wealth> w0,
                               double m0) {
    if (rows.size() < 3)
        throw DataError("at least 3 observations are required for a fit");
    detail::require_finite(m0, "m0");
    if (m0 < 0.0)
        throw DataError("m0 must be non-negative");
    periods_.reserve(rows.size());
    factors_.reserve(rows.size());
    for (const auto& row : rows) {
        if (!std::isfinite(row.n) || row.n < 0.0)
            throw DataError("observation periods must be finite and non-negative");
        if (!std::isfinite(row.value))
            throw DataError("observation values must be finite");
        double factor = row.value;
        if (row.is_amount) {
            if (!w0)
                throw DataError("amount observations require a wealth");
            factor = (w0->value() + m0) / (w0->value() + row.value);
        }
        if (!(factor > 0.0) || factor > 1.0)
            throw DataError("observed factors must lie in (0, 1]");
        periods_.push_back(row.n);
        factors_.push_back(factor);
    }
    for (std::size_t i = 0; i < periods_.size(); ++i)
        for (std::size_t j = i + 1; j < periods_.size(); ++j)
            if (periods_[i] == periods_[j])
                throw DataError("observation periods must be distinct");
}

FitResult fit(const ObservationSet& data, const FitOptions& options) {
    return fit_impl(data, options, std::nullopt);
}

FitResult fit_pinned_q(const ObservationSet& data, QIndex q, const FitOptions& options) {
    return fit_impl(data, options, q.value());
}

std::vector<ModelFit> compare_models(const ObservationSet& data, const FitOptions& options) {
    std::vector<ModelFit> fits;
    fits.push_back({"exponential", fit_pinned_q(data, QIndex(1.0), options)});
    fits.push_back({"hyperbolic", fit_pinned_q(data, QIndex(2.0), options)});
    fits.push_back({"q-exponential", fit(data, options)});
    std::stable_sort(fits.begin(), fits.end(),
                     [](const ModelFit& a, const ModelFit& b) { return a.result.sse < b.result.sse; });
    return fits;
}

}  // namespace tempodisc
