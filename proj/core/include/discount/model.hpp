#pragma once

/**
 * @file model.hpp
 * @brief Discount-function families, probability mixtures and local rates.
 *
 * A discount function D maps time t >= 0 to a weight in (0, 1] with D(0) = 1.
 * Three families are supported:
 *
 *   Exponential   D(t) = exp(-r t)
 *   Hyperbolic    D(t) = 1 / (1 + h t)
 *   Mixture       D(t) = sum_i p_i D_i(t)
 *
 * Two local rates are extracted from any model:
 *
 *   local exponential rate   r(t) = -D'(t) / D(t)
 *   local hyperbolic rate    h(t) = (1 / D(t) - 1) / t,   h(0) := -D'(0)
 *
 * All values are immutable; every function here is pure.
 */

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace discount {

struct Exponential {
    double rate;
    bool operator==(const Exponential&) const = default;
};

struct Hyperbolic {
    double rate;
    bool operator==(const Hyperbolic&) const = default;
};

/// A single-family discount function; mixtures are flattened into these.
using Component = std::variant<Exponential, Hyperbolic>;

struct Scenario {
    double weight;
    Component model;
};

/// Validated, flattened list of weighted components.
///
/// Construction rejects nonpositive or non-finite weights and rates and any
/// weight vector whose sum is more than 1e-12 away from 1. Accepted weights
/// are renormalized, and components sharing family and rate are merged by
/// summing their weights (first occurrence keeps its position).
class ScenarioSet {
public:
    static constexpr double kWeightTolerance = 1e-12;

    explicit ScenarioSet(std::vector<Scenario> scenarios);

    std::span<const Scenario> scenarios() const { return scenarios_; }
    std::size_t size() const { return scenarios_.size(); }
    bool all_hyperbolic() const;
    bool all_exponential() const;

private:
    std::vector<Scenario> scenarios_;
};

class DiscountModel {
public:
    using Variant = std::variant<Exponential, Hyperbolic, ScenarioSet>;

    DiscountModel(Exponential e);
    DiscountModel(Hyperbolic h);
    explicit DiscountModel(ScenarioSet s);
    DiscountModel(Component c);

    const Variant& variant() const { return v_; }
    bool is_mixture() const { return std::holds_alternative<ScenarioSet>(v_); }

    /// Flat scenario view: a mixture's own set, or the single component with weight 1.
    std::vector<Scenario> flatten() const;

private:
    Variant v_;
};

struct WeightedModel {
    double weight;
    DiscountModel model;
};

/// Build the certainty-equivalent mixture sum_i p_i D_i.
DiscountModel mix(ScenarioSet scenarios);

/// Mixture over arbitrary models; nested mixtures are flattened with weights multiplied.
DiscountModel mix(std::span<const WeightedModel> parts);

/// Discount factor together with an underflow flag.
struct DiscountValue {
    double value;
    bool clamped;  ///< true when the exact value underflowed and was raised to DBL_MIN
};

DiscountValue eval_discount_checked(const DiscountModel& model, double t);

/// D(t). Underflow is clamped to the smallest positive normal double.
double eval_discount(const DiscountModel& model, double t);

/// r(t) = -D'(t)/D(t) from the analytic derivative of each family.
double local_exp_rate(const DiscountModel& model, double t);

/// h(t) = (1/D(t) - 1)/t, continuously extended by -D'(0) at t = 0.
double local_hyp_rate(const DiscountModel& model, double t);

/// Two-scenario hyperbolic closed form
/// (p1 h1 + p2 h2 + h1 h2 t) / (1 + (p1 h2 + p2 h1) t) with p2 = 1 - p1.
double closed_form_h2(double p1, double h1, double h2, double t);

/// Rate parameter of a single-family component.
double component_rate(const Component& c);

/// "exponential(0.01)" / "hyperbolic(0.02)" style label.
std::string describe(const Component& c);

}  // namespace discount
