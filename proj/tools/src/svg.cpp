#include "discount/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "discount/asymptotics.hpp"
#include "discount/curve.hpp"

namespace discount::cli {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 630.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 530.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string axis_label(CurveKind c) {
    switch (c) {
        case CurveKind::Discount:
            return "D(t)";
        case CurveKind::ExpRate:
            return "r(t)";
        case CurveKind::HypRate:
            return "h(t)";
    }
    return "";
}

double pick(const RateSample& s, CurveKind c) {
    switch (c) {
        case CurveKind::Discount:
            return s.d;
        case CurveKind::ExpRate:
            return s.r_local;
        case CurveKind::HypRate:
            return s.h_local;
    }
    return 0.0;
}

struct Frame {
    const FigureSpec& spec;

    double x(double t) const {
        const double lo = spec.log_t ? std::log10(spec.x_min) : spec.x_min;
        const double hi = spec.log_t ? std::log10(spec.x_max) : spec.x_max;
        const double v = spec.log_t ? std::log10(t) : t;
        return kLeft + (v - lo) / (hi - lo) * (kRight - kLeft);
    }
    double y(double v) const { return kBottom - (v - spec.y_min) / (spec.y_max - spec.y_min) * (kBottom - kTop); }
};

}  // namespace

FigureSpec build_figure(const ScenarioFile& file, const std::vector<double>& grid) {
    validate_grid(grid);
    if (grid.size() < 2) throw ValidationError("figure needs a grid with at least two points");

    FigureSpec spec;
    spec.curve = file.output.curve.value_or(file.all_hyperbolic() ? CurveKind::HypRate : CurveKind::ExpRate);
    spec.log_t = file.output.log_t;
    const bool any_exp = std::any_of(file.entries.begin(), file.entries.end(),
                                     [](const ScenarioEntry& e) { return e.family == Family::Exponential; });
    spec.title = file.all_hyperbolic() ? "Hyperbolic Discount Functions"
                                       : (any_exp && std::all_of(file.entries.begin(), file.entries.end(),
                                                                 [](const ScenarioEntry& e) {
                                                                     return e.family == Family::Exponential;
                                                                 })
                                              ? "Exponential Discount Functions"
                                              : "Discount Functions");

    std::vector<double> times;
    for (double t : grid) {
        if (!spec.log_t || t > 0.0) times.push_back(t);
    }
    if (times.size() < 2) throw ValidationError("figure needs at least two plottable grid points");

    auto add = [&](const DiscountModel& model, std::string name, std::string label) {
        const auto curve = sample_curve(model, times);
        PlotSeries s{std::move(name), std::move(label), {}, {}};
        for (const auto& sample : curve.samples) {
            const double v = pick(sample, spec.curve);
            if (!std::isfinite(v)) continue;
            s.t.push_back(sample.t);
            s.y.push_back(v);
        }
        spec.series.push_back(std::move(s));
    };
    const auto components = file.components();
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& e = file.entries[i];
        add(components[i], "s" + std::to_string(i + 1),
            (e.family == Family::Exponential ? "exponential r=" : "hyperbolic h=") + e.rate_text + ", p=" +
                e.weight_text);
    }
    add(file.mixture(), "mixture", "mixture");

    if (file.output.reference_line) {
        const auto set = file.scenario_set();
        if (spec.curve == CurveKind::HypRate && set.all_hyperbolic()) {
            spec.reference = ReferenceLine{theorem2_target(set), "harmonic-mean", "harmonic mean limit"};
        } else if (spec.curve == CurveKind::ExpRate) {
            spec.reference = ReferenceLine{weitzman_limit(set), "weitzman-limit", "lowest limiting rate"};
        }
    }

    spec.x_min = times.front();
    spec.x_max = times.back();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& s : spec.series) {
        for (double v : s.y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (spec.reference) {
        lo = std::min(lo, spec.reference->value);
        hi = std::max(hi, spec.reference->value);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("figure has no finite values to plot");
    if (hi == lo) {
        const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
        lo -= pad;
        hi += pad;
    } else {
        const double pad = (hi - lo) * 0.05;
        lo -= pad;
        hi += pad;
    }
    spec.y_min = lo;
    spec.y_max = hi;
    return spec;
}

std::string render_svg(const FigureSpec& spec) {
    const bool ranges_ok = std::isfinite(spec.x_min) && std::isfinite(spec.x_max) && std::isfinite(spec.y_min) &&
                           std::isfinite(spec.y_max) && spec.x_min < spec.x_max && spec.y_min < spec.y_max &&
                           (!spec.log_t || spec.x_min > 0.0);
    if (!ranges_ok) throw ValidationError("figure axis ranges must be finite and ordered");

    const Frame f{spec};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
       << "<text x=\"" << fixed((kLeft + kRight) / 2) << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"18\">" << escape(spec.title) << "</text>\n";

    // Axes and ticks.
    os << "<g stroke=\"black\" stroke-width=\"1\">\n"
       << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kBottom) << "\" x2=\"" << fixed(kRight) << "\" y2=\""
       << fixed(kBottom) << "\"/>\n"
       << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(kLeft) << "\" y2=\""
       << fixed(kBottom) << "\"/>\n"
       << "</g>\n";
    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    constexpr int kTicks = 5;
    for (int i = 0; i < kTicks; ++i) {
        const double frac = static_cast<double>(i) / (kTicks - 1);
        const double tx = spec.log_t ? std::pow(10.0, std::log10(spec.x_min) +
                                                          frac * (std::log10(spec.x_max) - std::log10(spec.x_min)))
                                     : spec.x_min + frac * (spec.x_max - spec.x_min);
        const double px = f.x(tx);
        os << "<line x1=\"" << fixed(px) << "\" y1=\"" << fixed(kBottom) << "\" x2=\"" << fixed(px) << "\" y2=\""
           << fixed(kBottom + 5) << "\" stroke=\"black\"/>"
           << "<text x=\"" << fixed(px) << "\" y=\"" << fixed(kBottom + 18) << "\" text-anchor=\"middle\">"
           << tick_label(tx) << "</text>\n";
        const double ty = spec.y_min + frac * (spec.y_max - spec.y_min);
        const double py = f.y(ty);
        os << "<line x1=\"" << fixed(kLeft - 5) << "\" y1=\"" << fixed(py) << "\" x2=\"" << fixed(kLeft) << "\" y2=\""
           << fixed(py) << "\" stroke=\"black\"/>"
           << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(py + 4) << "\" text-anchor=\"end\">"
           << tick_label(ty) << "</text>\n";
    }
    os << "<text x=\"" << fixed((kLeft + kRight) / 2) << "\" y=\"" << fixed(kBottom + 45)
       << "\" text-anchor=\"middle\" font-size=\"14\">" << (spec.log_t ? "t (log scale)" : "t") << "</text>\n"
       << "<text x=\"20\" y=\"" << fixed((kTop + kBottom) / 2) << "\" text-anchor=\"middle\" font-size=\"14\" "
       << "transform=\"rotate(-90 20 " << fixed((kTop + kBottom) / 2) << ")\">" << axis_label(spec.curve)
       << "</text>\n"
       << "</g>\n";

    if (spec.reference) {
        const double py = f.y(spec.reference->value);
        os << "<line data-reference=\"" << escape(spec.reference->name) << "\" x1=\"" << fixed(kLeft) << "\" y1=\""
           << fixed(py) << "\" x2=\"" << fixed(kRight) << "\" y2=\"" << fixed(py)
           << "\" stroke=\"black\" stroke-dasharray=\"6 4\"/>\n";
    }

    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const auto& s = spec.series[i];
        const bool mixture = s.name == "mixture";
        const char* color = mixture ? "#000000" : kPalette[i % kPalette.size()];
        os << "<polyline data-series=\"" << escape(s.name) << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"" << (mixture ? "2.5" : "1.5") << "\" points=\"";
        for (std::size_t k = 0; k < s.t.size(); ++k) {
            if (k > 0) os << ' ';
            os << fixed(f.x(s.t[k])) << ',' << fixed(f.y(s.y[k]));
        }
        os << "\"/>\n";
    }

    // Legend.
    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    double ly = kTop + 10;
    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const auto& s = spec.series[i];
        const char* color = s.name == "mixture" ? "#000000" : kPalette[i % kPalette.size()];
        os << "<line x1=\"645\" y1=\"" << fixed(ly) << "\" x2=\"665\" y2=\"" << fixed(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/><text x=\"670\" y=\"" << fixed(ly + 4) << "\">" << escape(s.label)
           << "</text>\n";
        ly += 18;
    }
    if (spec.reference) {
        os << "<line x1=\"645\" y1=\"" << fixed(ly) << "\" x2=\"665\" y2=\"" << fixed(ly)
           << "\" stroke=\"black\" stroke-dasharray=\"6 4\"/><text x=\"670\" y=\"" << fixed(ly + 4) << "\">"
           << escape(spec.reference->label) << " " << tick_label(spec.reference->value) << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace discount::cli
