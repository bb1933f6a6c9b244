#include "discount/model.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>

#include "discount/errors.hpp"

namespace discount {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "time must be finite and non-negative, got " << t;
        throw DomainError(os.str());
    }
}

void check_rate(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        std::ostringstream os;
        os << "rate must be finite and positive, got " << rate;
        throw ValidationError(os.str());
    }
}

bool same_component(const Component& a, const Component& b) {
    return a.index() == b.index() && component_rate(a) == component_rate(b);
}

// Rescale so that the left-to-right floating sum is exactly 1 whenever the
// last weight can absorb the residual.
void renormalize(std::vector<Scenario>& s) {
    double sum = 0.0;
    for (const auto& sc : s) sum += sc.weight;
    for (auto& sc : s) sc.weight /= sum;
    for (int pass = 0; pass < 4; ++pass) {
        double acc = 0.0;
        for (const auto& sc : s) acc += sc.weight;
        if (acc == 1.0) break;
        const double fixed = s.back().weight + (1.0 - acc);
        if (!(fixed > 0.0)) break;
        s.back().weight = fixed;
    }
}

double component_discount(const Component& c, double t) {
    return std::visit(overloaded{
                          [t](const Exponential& e) { return std::exp(-e.rate * t); },
                          [t](const Hyperbolic& h) { return 1.0 / (1.0 + h.rate * t); },
                      },
                      c);
}

double component_log_discount(const Component& c, double t) {
    return std::visit(overloaded{
                          [t](const Exponential& e) { return -e.rate * t; },
                          [t](const Hyperbolic& h) { return -std::log1p(h.rate * t); },
                      },
                      c);
}

double component_exp_rate(const Component& c, double t) {
    return std::visit(overloaded{
                          [](const Exponential& e) { return e.rate; },
                          [t](const Hyperbolic& h) { return h.rate / (1.0 + h.rate * t); },
                      },
                      c);
}

// (1 - D(t)) / t, with its limit -D'(0) at t = 0.
double component_shortfall_rate(const Component& c, double t) {
    return std::visit(overloaded{
                          [t](const Exponential& e) {
                              return t == 0.0 ? e.rate : -std::expm1(-e.rate * t) / t;
                          },
                          [t](const Hyperbolic& h) { return h.rate / (1.0 + h.rate * t); },
                      },
                      c);
}

double log_mixture_discount(const ScenarioSet& s, double t) {
    double top = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(s.size());
    for (const auto& sc : s.scenarios()) {
        logs.push_back(std::log(sc.weight) + component_log_discount(sc.model, t));
        top = std::max(top, logs.back());
    }
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - top);
    return top + std::log(acc);
}

DiscountValue mixture_discount(const ScenarioSet& s, double t) {
    double sum = 0.0;
    for (const auto& sc : s.scenarios()) sum += sc.weight * component_discount(sc.model, t);
    if (sum < DBL_MIN) return {DBL_MIN, true};
    return {std::min(sum, 1.0), false};
}

}  // namespace

double component_rate(const Component& c) {
    return std::visit([](const auto& m) { return m.rate; }, c);
}

std::string describe(const Component& c) {
    std::ostringstream os;
    os << (std::holds_alternative<Exponential>(c) ? "exponential(" : "hyperbolic(")
       << component_rate(c) << ")";
    return os.str();
}

ScenarioSet::ScenarioSet(std::vector<Scenario> scenarios) {
    if (scenarios.empty()) throw ValidationError("scenario set must not be empty");
    double sum = 0.0;
    for (const auto& sc : scenarios) {
        if (!(sc.weight > 0.0) || !std::isfinite(sc.weight)) {
            std::ostringstream os;
            os << "scenario weight must be positive, got " << sc.weight;
            throw ValidationError(os.str());
        }
        check_rate(component_rate(sc.model));
        sum += sc.weight;
    }
    if (std::abs(sum - 1.0) > kWeightTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "scenario weights must sum to 1 (tolerance " << kWeightTolerance << "), got " << sum;
        throw ValidationError(os.str());
    }
    for (const auto& sc : scenarios) {
        auto it = std::find_if(scenarios_.begin(), scenarios_.end(),
                               [&](const Scenario& kept) { return same_component(kept.model, sc.model); });
        if (it == scenarios_.end()) {
            scenarios_.push_back(sc);
        } else {
            it->weight += sc.weight;
        }
    }
    renormalize(scenarios_);
}

bool ScenarioSet::all_hyperbolic() const {
    return std::all_of(scenarios_.begin(), scenarios_.end(),
                       [](const Scenario& s) { return std::holds_alternative<Hyperbolic>(s.model); });
}

bool ScenarioSet::all_exponential() const {
    return std::all_of(scenarios_.begin(), scenarios_.end(),
                       [](const Scenario& s) { return std::holds_alternative<Exponential>(s.model); });
}

DiscountModel::DiscountModel(Exponential e) : v_(e) { check_rate(e.rate); }
DiscountModel::DiscountModel(Hyperbolic h) : v_(h) { check_rate(h.rate); }
DiscountModel::DiscountModel(ScenarioSet s) : v_(std::move(s)) {}
DiscountModel::DiscountModel(Component c)
    : v_(std::visit([](const auto& m) -> Variant { return m; }, c)) {
    check_rate(component_rate(c));
}

std::vector<Scenario> DiscountModel::flatten() const {
    return std::visit(overloaded{
                          [](const Exponential& e) { return std::vector<Scenario>{{1.0, e}}; },
                          [](const Hyperbolic& h) { return std::vector<Scenario>{{1.0, h}}; },
                          [](const ScenarioSet& s) {
                              return std::vector<Scenario>(s.scenarios().begin(), s.scenarios().end());
                          },
                      },
                      v_);
}

DiscountModel mix(ScenarioSet scenarios) { return DiscountModel(std::move(scenarios)); }

DiscountModel mix(std::span<const WeightedModel> parts) {
    if (parts.empty()) throw ValidationError("scenario set must not be empty");
    double sum = 0.0;
    for (const auto& p : parts) {
        if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
            std::ostringstream os;
            os << "scenario weight must be positive, got " << p.weight;
            throw ValidationError(os.str());
        }
        sum += p.weight;
    }
    if (std::abs(sum - 1.0) > ScenarioSet::kWeightTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "scenario weights must sum to 1, got " << sum;
        throw ValidationError(os.str());
    }
    std::vector<Scenario> flat;
    for (const auto& p : parts) {
        for (const auto& inner : p.model.flatten()) {
            flat.push_back({p.weight / sum * inner.weight, inner.model});
        }
    }
    return DiscountModel(ScenarioSet(std::move(flat)));
}

DiscountValue eval_discount_checked(const DiscountModel& model, double t) {
    check_time(t);
    if (t == 0.0) return {1.0, false};
    return std::visit(overloaded{
                          [t](const Exponential& e) -> DiscountValue {
                              const double d = std::exp(-e.rate * t);
                              if (d < DBL_MIN) return {DBL_MIN, true};
                              return {d, false};
                          },
                          [t](const Hyperbolic& h) -> DiscountValue {
                              return {1.0 / (1.0 + h.rate * t), false};
                          },
                          [t](const ScenarioSet& s) { return mixture_discount(s, t); },
                      },
                      model.variant());
}

double eval_discount(const DiscountModel& model, double t) { return eval_discount_checked(model, t).value; }

double local_exp_rate(const DiscountModel& model, double t) {
    check_time(t);
    return std::visit(overloaded{
                          [](const Exponential& e) { return e.rate; },
                          [t](const Hyperbolic& h) { return h.rate / (1.0 + h.rate * t); },
                          [t](const ScenarioSet& s) {
                              // Weighted average of component rates with weights
                              // p_i D_i(t), evaluated in log space so that no
                              // weight underflows before normalization.
                              std::vector<double> logs;
                              logs.reserve(s.size());
                              double top = -std::numeric_limits<double>::infinity();
                              for (const auto& sc : s.scenarios()) {
                                  logs.push_back(std::log(sc.weight) + component_log_discount(sc.model, t));
                                  top = std::max(top, logs.back());
                              }
                              double num = 0.0;
                              double den = 0.0;
                              for (std::size_t i = 0; i < s.size(); ++i) {
                                  const double w = std::exp(logs[i] - top);
                                  num += w * component_exp_rate(s.scenarios()[i].model, t);
                                  den += w;
                              }
                              return num / den;
                          },
                      },
                      model.variant());
}

double local_hyp_rate(const DiscountModel& model, double t) {
    check_time(t);
    return std::visit(overloaded{
                          [t](const Exponential& e) {
                              return t == 0.0 ? e.rate : std::expm1(e.rate * t) / t;
                          },
                          [](const Hyperbolic& h) { return h.rate; },
                          [t](const ScenarioSet& s) {
                              // h(t) = [sum_i p_i (1 - D_i)/t] / D(t)
                              double shortfall = 0.0;
                              for (const auto& sc : s.scenarios()) {
                                  shortfall += sc.weight * component_shortfall_rate(sc.model, t);
                              }
                              if (t == 0.0) return shortfall;
                              const auto d = mixture_discount(s, t);
                              if (!d.clamped) return shortfall / d.value;
                              return shortfall * std::exp(-log_mixture_discount(s, t));
                          },
                      },
                      model.variant());
}

double closed_form_h2(double p1, double h1, double h2, double t) {
    if (!(p1 > 0.0 && p1 < 1.0)) {
        std::ostringstream os;
        os << "p1 must lie in (0, 1), got " << p1;
        throw DomainError(os.str());
    }
    if (!(h1 > 0.0) || !(h2 > 0.0)) throw DomainError("hyperbolic rates must be positive");
    check_time(t);
    const double p2 = 1.0 - p1;
    return (p1 * h1 + p2 * h2 + h1 * h2 * t) / (1.0 + (p1 * h2 + p2 * h1) * t);
}

}  // namespace discount
