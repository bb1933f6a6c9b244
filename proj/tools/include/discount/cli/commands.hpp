#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "discount/asymptotics.hpp"
#include "discount/cli/scenario_file.hpp"

namespace discount::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsageOrIo = 2,
    kExitInvalidInput = 3,
};

struct CommandOptions {
    std::filesystem::path scenario;
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    std::optional<int> points;
    std::optional<Spacing> spacing;
    std::optional<std::filesystem::path> out;
    double tolerance = 1e-6;
    double horizon = 1e8;
    std::optional<CurveKind> curve;
    bool log_t = false;
};

/// File grid with command-line overrides applied.
GridSpec effective_grid(const ScenarioFile& file, const CommandOptions& opts);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::optional<std::string> downgrade_notice;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Monotonicity grids used by `verify`.
inline constexpr double kExpRateGridMax = 1e4;
inline constexpr double kHypRateGridMax = 1e6;
inline constexpr int kVerifyGridPoints = 256;

VerifyReport verify_scenarios(const ScenarioFile& file, const CommandOptions& opts);

struct LimitRow {
    std::string model;
    RateKind kind;
    LimitEstimate estimate;
};

std::vector<LimitRow> limit_table(const ScenarioFile& file, const CommandOptions& opts);

int cmd_curve(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_limit(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_figure(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Full command-line entry point: `discount-kit curve|limit|verify|figure <file> [options]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace discount::cli
