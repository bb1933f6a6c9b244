#include "discount/cli/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "discount/curve.hpp"
#include "json.hpp"

namespace discount::cli {
namespace {

using nlohmann::json;

// Records the source text of every floating-point literal by JSON pointer,
// so that 0.01 can be read as exactly 1/100 instead of its binary neighbour.
class LiteralCollector : public nlohmann::json_sax<json> {
public:
    std::map<std::string, std::string> literals;

    bool null() override { return value(); }
    bool boolean(bool) override { return value(); }
    bool number_integer(number_integer_t) override { return value(); }
    bool number_unsigned(number_unsigned_t) override { return value(); }
    bool number_float(number_float_t, const string_t& s) override {
        value();
        literals[path()] = s;
        return true;
    }
    bool string(string_t&) override { return value(); }
    bool binary(binary_t&) override { return value(); }
    bool start_object(std::size_t) override {
        value();
        frames_.push_back({false, 0, {}});
        return true;
    }
    bool key(string_t& k) override {
        frames_.back().current = k;
        return true;
    }
    bool end_object() override {
        frames_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override {
        value();
        frames_.push_back({true, 0, {}});
        return true;
    }
    bool end_array() override {
        frames_.pop_back();
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

private:
    struct Frame {
        bool array;
        std::size_t next;
        std::string current;
    };

    bool value() {
        if (!frames_.empty() && frames_.back().array) frames_.back().current = std::to_string(frames_.back().next++);
        return true;
    }

    std::string path() const {
        std::string p;
        for (const auto& f : frames_) p += "/" + f.current;
        return p;
    }

    std::vector<Frame> frames_;
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

Rational read_exact(const json& node, const std::string& where, const std::map<std::string, std::string>& literals) {
    try {
        if (node.is_string()) return Rational::parse(node.get<std::string>());
        if (node.is_number_integer()) return Rational(node.get<long>());
        if (node.is_number_float()) {
            auto it = literals.find(where);
            if (it != literals.end()) return Rational::parse(it->second);
            return Rational::from_double(node.get<double>());
        }
    } catch (const Error& e) {
        fail(where, e.what());
    }
    fail(where, "expected a number or a fraction string");
}

std::string literal_text(const json& node, const std::string& where, const std::map<std::string, std::string>& literals) {
    if (node.is_string()) return node.get<std::string>();
    auto it = literals.find(where);
    if (it != literals.end()) return it->second;
    return node.dump();
}

double read_double(const json& node, const std::string& where) {
    if (node.is_number()) return node.get<double>();
    fail(where, "expected a number");
}

void read_grid(const json& g, GridSpec& grid) {
    if (!g.is_object()) fail("/grid", "expected an object");
    if (g.contains("min")) grid.min = read_double(g["min"], "/grid/min");
    if (g.contains("max")) grid.max = read_double(g["max"], "/grid/max");
    if (g.contains("points")) {
        if (!g["points"].is_number_integer()) fail("/grid/points", "expected an integer");
        grid.points = g["points"].get<int>();
    }
    if (g.contains("spacing")) {
        const auto& s = g["spacing"];
        auto parsed = s.is_string() ? parse_spacing(s.get<std::string>()) : std::nullopt;
        if (!parsed) fail("/grid/spacing", "expected \"linear\" or \"geometric\"");
        grid.spacing = *parsed;
    }
}

void read_output(const json& o, OutputOptions& out) {
    if (!o.is_object()) fail("/output", "expected an object");
    if (o.contains("reference_line")) {
        if (!o["reference_line"].is_boolean()) fail("/output/reference_line", "expected true or false");
        out.reference_line = o["reference_line"].get<bool>();
    }
    if (o.contains("log_t")) {
        if (!o["log_t"].is_boolean()) fail("/output/log_t", "expected true or false");
        out.log_t = o["log_t"].get<bool>();
    }
    if (o.contains("curve")) {
        const auto& c = o["curve"];
        auto parsed = c.is_string() ? parse_curve_kind(c.get<std::string>()) : std::nullopt;
        if (!parsed) fail("/output/curve", "expected \"D\", \"r\" or \"h\"");
        out.curve = *parsed;
    }
}

}  // namespace

Component ScenarioEntry::component() const {
    const double r = rate.to_double();
    if (family == Family::Exponential) return Exponential{r};
    return Hyperbolic{r};
}

ScenarioSet ScenarioFile::scenario_set() const {
    std::vector<Scenario> s;
    s.reserve(entries.size());
    for (const auto& e : entries) s.push_back({e.weight.to_double(), e.component()});
    return ScenarioSet(std::move(s));
}

DiscountModel ScenarioFile::mixture() const { return mix(scenario_set()); }

std::vector<DiscountModel> ScenarioFile::components() const {
    std::vector<DiscountModel> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.emplace_back(e.component());
    return out;
}

bool ScenarioFile::all_hyperbolic() const {
    for (const auto& e : entries) {
        if (e.family != Family::Hyperbolic) return false;
    }
    return true;
}

std::optional<ExactScenarioSet> ScenarioFile::exact() const {
    if (!exact_eligible) return std::nullopt;
    std::vector<ExactScenario> s;
    s.reserve(entries.size());
    for (const auto& e : entries) s.push_back({e.weight, e.rate});
    return ExactScenarioSet(std::move(s));
}

ScenarioFile parse_scenarios_text(std::string_view text) {
    LiteralCollector literals;
    json doc;
    try {
        doc = json::parse(text);
        json::sax_parse(text, &literals);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("/", "expected a JSON object");
    if (!doc.contains("scenarios")) fail("/scenarios", "missing");
    const auto& list = doc["scenarios"];
    if (!list.is_array() || list.empty()) fail("/scenarios", "expected a non-empty array");

    ScenarioFile file;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string base = "/scenarios/" + std::to_string(i);
        const auto& item = list[i];
        if (!item.is_object()) fail(base, "expected an object");
        for (const char* field : {"family", "rate", "weight"}) {
            if (!item.contains(field)) fail(base + "/" + field, "missing");
        }
        ScenarioEntry entry{};
        const auto& fam = item["family"];
        const std::string fam_name = fam.is_string() ? fam.get<std::string>() : fam.dump();
        if (fam_name == "exponential") {
            entry.family = Family::Exponential;
        } else if (fam_name == "hyperbolic") {
            entry.family = Family::Hyperbolic;
        } else {
            fail(base + "/family", "unknown family \"" + fam_name + "\" (expected exponential or hyperbolic)");
        }
        entry.rate = read_exact(item["rate"], base + "/rate", literals.literals);
        entry.weight = read_exact(item["weight"], base + "/weight", literals.literals);
        entry.rate_text = literal_text(item["rate"], base + "/rate", literals.literals);
        entry.weight_text = literal_text(item["weight"], base + "/weight", literals.literals);
        if (entry.rate.sign() <= 0) fail(base + "/rate", "rate must be positive, got " + entry.rate_text);
        if (entry.weight.sign() <= 0) fail(base + "/weight", "weight must be positive, got " + entry.weight_text);
        file.entries.push_back(std::move(entry));
    }

    if (doc.contains("grid")) read_grid(doc["grid"], file.grid);
    if (doc.contains("output")) read_output(doc["output"], file.output);

    try {
        (void)file.scenario_set();
    } catch (const Error& e) {
        fail("/scenarios", e.what());
    }

    Rational total;
    for (const auto& e : file.entries) total += e.weight;
    if (!file.all_hyperbolic()) {
        file.ineligible_reason = "exponential components have no exact rational form";
    } else if (total != Rational(1)) {
        file.ineligible_reason = "weights sum to " + total.str() + ", not exactly 1 (write repeating weights as fractions, e.g. \"1/3\")";
    } else {
        file.exact_eligible = true;
    }
    return file;
}

ScenarioFile parse_scenarios(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenarios_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::vector<double> make_grid(const GridSpec& spec) {
    if (spec.points < 2) throw ValidationError("grid needs at least two points");
    if (!std::isfinite(spec.min) || !std::isfinite(spec.max) || spec.min < 0.0 || !(spec.max > spec.min)) {
        throw ValidationError("grid needs finite 0 <= min < max");
    }
    if (spec.spacing == Spacing::Linear) return linear_grid(spec.min, spec.max, spec.points);
    if (spec.min > 0.0) return geometric_grid(spec.min, spec.max, spec.points);
    if (!(spec.max > 1.0)) throw ValidationError("geometric grid from 0 needs max > 1");
    auto grid = geometric_grid(1.0, spec.max, spec.points);
    grid.insert(grid.begin(), 0.0);
    return grid;
}

std::string to_string(Spacing s) { return s == Spacing::Linear ? "linear" : "geometric"; }

std::string to_string(CurveKind c) {
    switch (c) {
        case CurveKind::Discount:
            return "D";
        case CurveKind::ExpRate:
            return "r";
        case CurveKind::HypRate:
            return "h";
    }
    return "?";
}

std::optional<Spacing> parse_spacing(std::string_view s) {
    if (s == "linear") return Spacing::Linear;
    if (s == "geometric") return Spacing::Geometric;
    return std::nullopt;
}

std::optional<CurveKind> parse_curve_kind(std::string_view s) {
    if (s == "D") return CurveKind::Discount;
    if (s == "r") return CurveKind::ExpRate;
    if (s == "h") return CurveKind::HypRate;
    return std::nullopt;
}

}  // namespace discount::cli
