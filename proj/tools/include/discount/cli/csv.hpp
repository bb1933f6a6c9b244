#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "discount/curve.hpp"

namespace discount::cli {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

struct NamedCurve {
    std::string series;
    RateCurve curve;
};

/// Header `t,series,D,r_local,h_local`, then one row per (grid point, series)
/// with series varying fastest. All curves must share one grid.
void write_curve_csv(std::ostream& out, std::span<const NamedCurve> curves);

struct CurveColumns {
    std::vector<double> t;
    std::vector<double> d;
    std::vector<double> r_local;
    std::vector<double> h_local;
};

/// Series name -> columns, as written by write_curve_csv. Throws ValidationError on malformed input.
std::map<std::string, CurveColumns> read_curve_csv(std::istream& in);

}  // namespace discount::cli
