#include "discount/cli/csv.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <sstream>

#include "discount/errors.hpp"

namespace discount::cli {
namespace {

double parse_field(const std::string& s, std::size_t line) {
    double v = 0.0;
    if (s == "inf") return std::numeric_limits<double>::infinity();
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ValidationError("csv line " + std::to_string(line) + ": bad number \"" + s + "\"");
    }
    return v;
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

void write_curve_csv(std::ostream& out, std::span<const NamedCurve> curves) {
    out << "t,series,D,r_local,h_local\n";
    if (curves.empty()) return;
    const std::size_t rows = curves.front().curve.samples.size();
    for (const auto& c : curves) {
        if (c.curve.samples.size() != rows) throw ValidationError("curves passed to csv writer use different grids");
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (const auto& c : curves) {
            const auto& s = c.curve.samples[i];
            out << format_double(s.t) << ',' << c.series << ',' << format_double(s.d) << ','
                << format_double(s.r_local) << ',' << format_double(s.h_local) << '\n';
        }
    }
}

std::map<std::string, CurveColumns> read_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "t,series,D,r_local,h_local") {
        throw ValidationError("csv: missing or unexpected header");
    }
    std::map<std::string, CurveColumns> out;
    std::size_t n = 1;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != 5) throw ValidationError("csv line " + std::to_string(n) + ": expected 5 fields");
        auto& col = out[fields[1]];
        col.t.push_back(parse_field(fields[0], n));
        col.d.push_back(parse_field(fields[2], n));
        col.r_local.push_back(parse_field(fields[3], n));
        col.h_local.push_back(parse_field(fields[4], n));
    }
    return out;
}

}  // namespace discount::cli
