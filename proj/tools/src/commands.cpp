#include "discount/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "discount/certify.hpp"
#include "discount/cli/csv.hpp"
#include "discount/cli/svg.hpp"
#include "discount/curve.hpp"

namespace discount::cli {
namespace {

std::string sci(double v, int digits = 12) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_output(const std::optional<std::filesystem::path>& path, const std::string& content, std::ostream& out) {
    if (!path) {
        out << content;
        return;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file " + path->string());
    file << content;
    file.flush();
    if (!file) throw IoError("failed writing output file " + path->string());
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageOrIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

CheckResult monotone_check(const std::string& name, const DiscountModel& model, RateKind kind,
                           const std::vector<double>& grid) {
    const auto rep = verify_monotone_numeric(model, kind, grid);
    std::ostringstream os;
    os << grid.size() << "-point geometric grid [" << sci(grid.front()) << ", " << sci(grid.back()) << "]";
    if (rep.pass) {
        os << ", no increase beyond relative slack " << sci(kMonotoneSlack, 3);
    } else {
        os << ", first violation between t=" << sci(rep.t_before) << " (" << sci(rep.value_before) << ") and t="
           << sci(rep.t_after) << " (" << sci(rep.value_after) << ")";
    }
    return {name, rep.pass, os.str()};
}

CheckResult limit_check(const std::string& name, const DiscountModel& model, RateKind kind, double target,
                        const CommandOptions& opts) {
    LimitConfig cfg;
    cfg.tolerance = opts.tolerance;
    const auto est = estimate_limit(model, kind, opts.horizon, target, cfg);
    std::ostringstream os;
    if (est.verdict == Verdict::Diverges) {
        os << "diverges (target " << sci(target) << ")";
    } else {
        os << "estimate " << sci(est.estimate) << " +/- " << sci(est.error_bound, 3) << " at horizon "
           << sci(opts.horizon, 3) << ", target " << sci(target) << ", |diff| = "
           << sci(std::abs(est.estimate - target), 3) << ", " << to_string(est.verdict);
    }
    return {name, est.verdict == Verdict::Consistent, os.str()};
}

}  // namespace

GridSpec effective_grid(const ScenarioFile& file, const CommandOptions& opts) {
    GridSpec g = file.grid;
    if (opts.grid_min) g.min = *opts.grid_min;
    if (opts.grid_max) g.max = *opts.grid_max;
    if (opts.points) g.points = *opts.points;
    if (opts.spacing) g.spacing = *opts.spacing;
    return g;
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

VerifyReport verify_scenarios(const ScenarioFile& file, const CommandOptions& opts) {
    VerifyReport report;
    const ScenarioSet set = file.scenario_set();
    const DiscountModel mixture = mix(set);
    std::optional<double> exact_h_limit;

    if (auto exact = file.exact()) {
        const auto cert = certify_theorem1(*exact);
        const bool expected = exact->size() == 1 ? cert.claim == SignClaim::IdenticallyZero
                                                 : cert.claim == SignClaim::StrictlyNegative;
        report.checks.push_back({"h'(t) sign certificate (exact)", cert.valid && expected, cert.summary()});

        const auto lim = exact_limit(h_exact(mixture_to_rational(*exact)));
        const Rational harmonic = exact_harmonic_mean(*exact);
        std::ostringstream os;
        if (lim.finite) {
            os << "lim h(t) = " << lim.value.str() << " = " << sci(lim.value.to_double(), 15)
               << ", weighted harmonic mean = " << harmonic.str();
            exact_h_limit = lim.value.to_double();
        } else {
            os << "lim h(t) diverges";
        }
        report.checks.push_back({"exact limit of h(t)", lim.finite && lim.value == harmonic, os.str()});
    } else {
        report.downgrade_notice = "exact certification skipped (" + file.ineligible_reason + "); numeric checks only";
    }

    report.checks.push_back(monotone_check("r(t) non-increasing (numeric)", mixture, RateKind::Exponential,
                                           geometric_grid(1.0, kExpRateGridMax, kVerifyGridPoints)));
    if (set.all_hyperbolic()) {
        report.checks.push_back(monotone_check("h(t) non-increasing (numeric)", mixture, RateKind::Hyperbolic,
                                               geometric_grid(1.0, kHypRateGridMax, kVerifyGridPoints)));
    }
    report.checks.push_back(
        limit_check("limit of r(t) (numeric)", mixture, RateKind::Exponential, weitzman_limit(set), opts));
    if (set.all_hyperbolic()) {
        report.checks.push_back(limit_check("limit of h(t) (numeric)", mixture, RateKind::Hyperbolic,
                                            exact_h_limit.value_or(theorem2_target(set)), opts));
    }
    return report;
}

std::vector<LimitRow> limit_table(const ScenarioFile& file, const CommandOptions& opts) {
    LimitConfig cfg;
    cfg.tolerance = opts.tolerance;
    std::vector<LimitRow> rows;
    const auto components = file.components();
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& e = file.entries[i];
        const double rate = e.rate.to_double();
        const std::string name = "s" + std::to_string(i + 1);
        const bool exp = e.family == Family::Exponential;
        rows.push_back({name, RateKind::Exponential,
                        estimate_limit(components[i], RateKind::Exponential, opts.horizon, exp ? rate : 0.0, cfg)});
        rows.push_back({name, RateKind::Hyperbolic,
                        estimate_limit(components[i], RateKind::Hyperbolic, opts.horizon,
                                       exp ? std::nullopt : std::optional<double>(rate), cfg)});
    }
    const auto set = file.scenario_set();
    const auto mixture = mix(set);
    rows.push_back({"mixture", RateKind::Exponential,
                    estimate_limit(mixture, RateKind::Exponential, opts.horizon, weitzman_limit(set), cfg)});
    rows.push_back({"mixture", RateKind::Hyperbolic,
                    estimate_limit(mixture, RateKind::Hyperbolic, opts.horizon,
                                   set.all_hyperbolic() ? std::optional<double>(theorem2_target(set)) : std::nullopt,
                                   cfg)});
    return rows;
}

int cmd_curve(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto file = parse_scenarios(opts.scenario);
        const auto grid = make_grid(effective_grid(file, opts));
        std::vector<NamedCurve> curves;
        const auto components = file.components();
        for (std::size_t i = 0; i < components.size(); ++i) {
            curves.push_back({"s" + std::to_string(i + 1), sample_curve(components[i], grid)});
        }
        curves.push_back({"mixture", sample_curve(file.mixture(), grid)});
        std::ostringstream csv;
        write_curve_csv(csv, curves);
        write_output(opts.out, csv.str(), out);
        return static_cast<int>(kExitOk);
    });
}

int cmd_limit(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto file = parse_scenarios(opts.scenario);
        const auto set = file.scenario_set();
        out << "exponential-rate limit (lowest component limit): " << fixed6(weitzman_limit(set)) << '\n';
        if (set.all_hyperbolic()) {
            out << "hyperbolic-rate limit (weighted harmonic mean): " << fixed6(theorem2_target(set)) << '\n';
        } else {
            out << "hyperbolic-rate limit: n/a (exponential components present)\n";
        }
        out << '\n'
            << std::left << std::setw(9) << "model" << std::setw(6) << "rate" << std::setw(14) << "target"
            << std::setw(20) << "estimate" << std::setw(12) << "error" << "verdict\n";
        bool failed = false;
        for (const auto& row : limit_table(file, opts)) {
            const auto& e = row.estimate;
            const bool diverges = e.verdict == Verdict::Diverges;
            out << std::setw(9) << row.model << std::setw(6) << to_string(row.kind) << std::setw(14)
                << (e.target ? fixed6(*e.target) : std::string("-")) << std::setw(20)
                << (diverges ? std::string("diverges") : sci(e.estimate)) << std::setw(12)
                << (diverges ? std::string("-") : sci(e.error_bound, 3)) << to_string(e.verdict) << '\n';
            failed = failed || e.verdict == Verdict::Inconsistent;
        }
        return static_cast<int>(failed ? kExitCheckFailed : kExitOk);
    });
}

int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto file = parse_scenarios(opts.scenario);
        const auto report = verify_scenarios(file, opts);
        if (report.downgrade_notice) out << "note: " << *report.downgrade_notice << '\n';
        for (const auto& c : report.checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
        }
        const bool ok = report.all_pass();
        out << (ok ? "all checks passed\n" : "some checks FAILED\n");
        return static_cast<int>(ok ? kExitOk : kExitCheckFailed);
    });
}

int cmd_figure(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto file = parse_scenarios(opts.scenario);
        if (opts.curve) file.output.curve = opts.curve;
        if (opts.log_t) file.output.log_t = true;
        const auto grid = make_grid(effective_grid(file, opts));
        write_output(opts.out, render_svg(build_figure(file, grid)), out);
        return static_cast<int>(kExitOk);
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exponential, hyperbolic and mixture discount-function analysis", "discount-kit"};
    app.require_subcommand(1);

    CommandOptions opts;
    std::string spacing;
    std::string curve;
    using Handler = int (*)(const CommandOptions&, std::ostream&, std::ostream&);
    Handler handler = nullptr;

    auto add = [&](const char* name, const char* help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("scenario-file", opts.scenario, "JSON scenario document")->required();
        sub->add_option("--grid-min", opts.grid_min, "smallest grid time");
        sub->add_option("--grid-max", opts.grid_max, "largest grid time");
        sub->add_option("--points", opts.points, "number of grid points");
        sub->add_option("--spacing", spacing, "grid spacing")->check(CLI::IsMember({"linear", "geometric"}));
        sub->add_option("--out", opts.out, "output path (default: stdout)");
        sub->add_option("--tolerance", opts.tolerance, "absolute tolerance for limit verdicts");
        sub->final_callback([&handler, h] { handler = h; });
        return sub;
    };
    add("curve", "write the sampled D, r and h curves as CSV", &cmd_curve);
    add("limit", "estimate long-horizon limits of r(t) and h(t)", &cmd_limit)
        ->add_option("--horizon", opts.horizon, "largest evaluation time");
    add("verify", "certify monotone decline and the harmonic-mean limit", &cmd_verify)
        ->add_option("--horizon", opts.horizon, "largest evaluation time for limit checks");
    auto* fig = add("figure", "render component and mixture curves as SVG", &cmd_figure);
    fig->add_option("--curve", curve, "curve to plot")->check(CLI::IsMember({"D", "r", "h"}));
    fig->add_flag("--log-t", opts.log_t, "logarithmic time axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? static_cast<int>(kExitOk) : static_cast<int>(kExitUsageOrIo);
    }
    if (!spacing.empty()) opts.spacing = parse_spacing(spacing);
    if (!curve.empty()) opts.curve = parse_curve_kind(curve);
    if (!(opts.horizon > 0.0) || !(opts.tolerance >= 0.0)) {
        err << "error: --horizon must be positive and --tolerance non-negative\n";
        return kExitUsageOrIo;
    }
    return handler(opts, out, err);
}

}  // namespace discount::cli
