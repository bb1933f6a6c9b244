#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discount/errors.hpp"
#include "discount/exact_mixture.hpp"
#include "discount/model.hpp"
#include "discount/rational.hpp"

namespace discount::cli {

/// Malformed or invalid scenario document. The message names the field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

enum class Family { Exponential, Hyperbolic };
enum class Spacing { Linear, Geometric };
enum class CurveKind { Discount, ExpRate, HypRate };

struct ScenarioEntry {
    Family family;
    std::string rate_text;
    std::string weight_text;
    Rational rate;
    Rational weight;

    Component component() const;
};

/// Time grid request. A geometric grid with min = 0 runs from 1 to max and
/// gets t = 0 prepended.
struct GridSpec {
    double min = 0.0;
    double max = 1e4;
    int points = 256;
    Spacing spacing = Spacing::Geometric;
};

struct OutputOptions {
    bool reference_line = true;
    std::optional<CurveKind> curve;
    bool log_t = false;
};

struct ScenarioFile {
    std::vector<ScenarioEntry> entries;
    GridSpec grid;
    OutputOptions output;
    bool exact_eligible = false;
    std::string ineligible_reason;  ///< why the exact path is unavailable

    /// Validated floating-point scenario set (duplicates merged).
    ScenarioSet scenario_set() const;
    DiscountModel mixture() const;
    /// One model per document entry, in document order.
    std::vector<DiscountModel> components() const;
    bool all_hyperbolic() const;
    /// Exact counterpart; empty unless exact_eligible.
    std::optional<ExactScenarioSet> exact() const;
};

/// Parse a scenario document. Throws ParseError on any schema or value problem.
ScenarioFile parse_scenarios_text(std::string_view text);

/// Throws IoError if the file cannot be read.
ScenarioFile parse_scenarios(const std::filesystem::path& path);

/// Materialize a grid; needs at least two points. Throws ValidationError.
std::vector<double> make_grid(const GridSpec& spec);

std::string to_string(Spacing s);
std::string to_string(CurveKind c);
std::optional<Spacing> parse_spacing(std::string_view s);
std::optional<CurveKind> parse_curve_kind(std::string_view s);

}  // namespace discount::cli
