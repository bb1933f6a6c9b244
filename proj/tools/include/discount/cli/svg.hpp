#pragma once

#include <optional>
#include <string>
#include <vector>

#include "discount/cli/scenario_file.hpp"

namespace discount::cli {

struct PlotSeries {
    std::string name;   ///< data-series attribute: s1, s2, ..., mixture
    std::string label;  ///< legend text
    std::vector<double> t;
    std::vector<double> y;
};

struct ReferenceLine {
    double value;
    std::string name;
    std::string label;
};

/// What to draw. Axis ranges must be finite with min < max.
struct FigureSpec {
    std::string title;
    CurveKind curve = CurveKind::HypRate;
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
    bool log_t = false;
    std::vector<PlotSeries> series;
    std::optional<ReferenceLine> reference;
};

/// Components plus mixture sampled on `grid`, with axis ranges fitted to the
/// finite data. The curve defaults to h for all-hyperbolic files and r otherwise.
FigureSpec build_figure(const ScenarioFile& file, const std::vector<double>& grid);

/// Standalone 800x600 SVG; byte-identical for identical specs.
std::string render_svg(const FigureSpec& spec);

}  // namespace discount::cli
