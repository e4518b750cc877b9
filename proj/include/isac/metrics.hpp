#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "isac/ccdf.hpp"

namespace isac {

enum class LogBase { Natural, Base2 };

struct GainReport {
  double level = 0.5;
  double shift_db = 0.0;
  double relative_gain_pct = 0.0;
};

// log(1 + theta) * coverage.
double throughput(double theta, double coverage, LogBase base = LogBase::Natural);

// Threshold in dB at which the curve crosses `level`, by piecewise-linear
// interpolation in (dB theta, ccdf). RangeError if the level is not bracketed.
double crossing_db(const CcdfCurve& curve, double level);

// crossing_db(a) - crossing_db(b); positive when a reaches the level at a
// higher threshold.
double horizontal_shift_db(const CcdfCurve& a, const CcdfCurve& b, double level = 0.5);

// 100 (a - b) / b. DomainError("undefined gain") when b == 0.
double relative_gain_pct(double a, double b);

// sup |F_n - F| over the samples, checking both sides of every jump.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

// Index of a strict interior minimum or maximum: the first i in (0, n-1)
// with ys[i] strictly below (or above) both neighbours.
std::optional<std::size_t> find_interior_extremum(const std::vector<double>& xs,
                                                  const std::vector<double>& ys);

}  // namespace isac
