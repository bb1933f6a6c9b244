#include "discount/asymptotics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "discount/errors.hpp"
#include "discount/means.hpp"

namespace discount {
namespace {

struct GridValue {
    double t;
    double value;
    bool divergent;  // +inf, or D clamped while extracting the hyperbolic rate
    bool underflow;  // zero, subnormal or NaN
};

struct LineFit {
    double intercept;
    double slope;  // in the scaled abscissa u = horizon / t
    double max_residual;
};

// Least squares y = c0 + c1 u.
LineFit fit_line(std::span<const double> u, std::span<const double> y) {
    const auto n = static_cast<double>(u.size());
    double mu = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        mu += u[i];
        my += y[i];
    }
    mu /= n;
    my /= n;
    double suu = 0.0;
    double suy = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        suu += (u[i] - mu) * (u[i] - mu);
        suy += (u[i] - mu) * (y[i] - my);
    }
    const double slope = suu > 0.0 ? suy / suu : 0.0;
    const double intercept = my - slope * mu;
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        worst = std::max(worst, std::abs(y[i] - (intercept + slope * u[i])));
    }
    return {intercept, slope, worst};
}

Verdict judge(double estimate, double bound, std::optional<double> target, double tolerance) {
    if (!target) return Verdict::NoTarget;
    return std::abs(estimate - *target) <= std::max(bound, tolerance) ? Verdict::Consistent : Verdict::Inconsistent;
}

LimitEstimate diverging(double horizon, std::optional<double> target, FitDiagnostics fit) {
    LimitEstimate out;
    out.estimate = std::numeric_limits<double>::infinity();
    out.error_bound = 0.0;
    out.horizon = horizon;
    out.fit = fit;
    out.target = target;
    out.verdict = Verdict::Diverges;
    return out;
}

}  // namespace

std::string to_string(RateKind kind) { return kind == RateKind::Exponential ? "r" : "h"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Consistent:
            return "consistent";
        case Verdict::Inconsistent:
            return "inconsistent";
        case Verdict::NoTarget:
            return "no-target";
        case Verdict::Diverges:
            return "diverges";
    }
    return "unknown";
}

double local_rate(const DiscountModel& model, RateKind kind, double t) {
    return kind == RateKind::Exponential ? local_exp_rate(model, t) : local_hyp_rate(model, t);
}

LimitEstimate estimate_limit(const DiscountModel& model, RateKind kind, double horizon,
                             std::optional<double> target, const LimitConfig& config) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        std::ostringstream os;
        os << "limit horizon must be finite and positive, got " << horizon;
        throw DomainError(os.str());
    }
    if (config.grid_exponent < 4) throw ValidationError("limit grid needs K >= 4");

    std::vector<GridValue> grid;
    grid.reserve(static_cast<std::size_t>(config.grid_exponent) + 1);
    for (int k = 0; k <= config.grid_exponent; ++k) {
        const double t = std::ldexp(horizon, -k);
        const double v = local_rate(model, kind, t);
        const bool clamped = kind == RateKind::Hyperbolic && eval_discount_checked(model, t).clamped;
        const bool divergent = clamped || v == std::numeric_limits<double>::infinity();
        const bool underflow = !divergent && !(std::abs(v) >= DBL_MIN);
        grid.push_back({t, v, divergent, underflow});
    }

    const bool any_usable = std::any_of(grid.begin(), grid.end(),
                                        [](const GridValue& g) { return !g.divergent && !g.underflow; });
    const bool any_divergent = std::any_of(grid.begin(), grid.end(), [](const GridValue& g) { return g.divergent; });
    if (!any_usable && !any_divergent) {
        throw InsufficientHorizonError("local rate underflows on the whole limit grid; use a shorter horizon");
    }

    // Largest-t half, ordered by decreasing t.
    const std::size_t half = static_cast<std::size_t>(config.grid_exponent / 2) + 1;
    FitDiagnostics diag;
    for (std::size_t i = 0; i < half; ++i) {
        if (grid[i].divergent) return diverging(horizon, target, diag);
    }
    diag.end_growth = grid[0].value / grid[1].value - 1.0;
    if (grid[0].value > grid[1].value * (1.0 + config.divergence_growth)) {
        return diverging(horizon, target, diag);
    }

    std::vector<double> u;
    std::vector<double> y;
    for (std::size_t i = 0; i < half; ++i) {
        if (grid[i].underflow) continue;
        u.push_back(horizon / grid[i].t);
        y.push_back(grid[i].value);
    }
    if (u.size() < 3) {
        throw InsufficientHorizonError("fewer than three usable points on the limit grid");
    }

    LineFit fit = fit_line(u, y);
    std::size_t used = u.size();
    while (used > 3 && fit.max_residual > std::abs(fit.slope)) {
        --used;
        fit = fit_line(std::span(u).first(used), std::span(y).first(used));
    }

    // u = horizon / t, so slope in u equals a / horizon.
    const double tail = std::abs(fit.slope);
    diag.max_residual = fit.max_residual;
    diag.slope = fit.slope * horizon;
    diag.points_used = static_cast<int>(used);
    diag.ill_conditioned = fit.max_residual > tail;

    LimitEstimate out;
    out.estimate = fit.intercept;
    out.error_bound = fit.max_residual + tail;
    out.horizon = horizon;
    out.fit = diag;
    out.target = target;
    out.verdict = judge(out.estimate, out.error_bound, target, config.tolerance);
    return out;
}

double weitzman_limit(const ScenarioSet& scenarios) {
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& s : scenarios.scenarios()) {
        const double limit = std::holds_alternative<Exponential>(s.model) ? component_rate(s.model) : 0.0;
        lowest = std::min(lowest, limit);
    }
    return lowest;
}

double theorem2_target(const ScenarioSet& scenarios) {
    if (!scenarios.all_hyperbolic()) {
        throw UnsupportedFamilyError("harmonic-mean limit applies to all-hyperbolic scenario sets only");
    }
    std::vector<double> rates;
    std::vector<double> weights;
    for (const auto& s : scenarios.scenarios()) {
        rates.push_back(component_rate(s.model));
        weights.push_back(s.weight);
    }
    return harmonic_mean(rates, weights);
}

MonotoneReport verify_monotone_values(std::span<const double> times, std::span<const double> values) {
    if (times.size() != values.size()) throw ValidationError("times and values differ in length");
    if (times.size() < 3) throw ValidationError("monotonicity check needs at least three grid points");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || times[i] < 0.0 || (i > 0 && !(times[i] > times[i - 1]))) {
            throw ValidationError("monotonicity grid must be finite, non-negative and strictly increasing");
        }
    }
    MonotoneReport report;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const double before = values[i];
        const double after = values[i + 1];
        if (!(after <= before + kMonotoneSlack * std::abs(before))) {
            report.pass = false;
            report.first_violation = i;
            report.t_before = times[i];
            report.t_after = times[i + 1];
            report.value_before = before;
            report.value_after = after;
            break;
        }
    }
    return report;
}

MonotoneReport verify_monotone_numeric(const DiscountModel& model, RateKind kind, std::span<const double> grid) {
    std::vector<double> values;
    values.reserve(grid.size());
    for (double t : grid) {
        if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("monotonicity grid must be finite and non-negative");
        values.push_back(local_rate(model, kind, t));
    }
    return verify_monotone_values(grid, values);
}

}  // namespace discount
