#include "isac/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isac/errors.hpp"

namespace isac {

double throughput(double theta, double coverage, LogBase base) {
  if (!(theta > 0.0)) throw DomainError("throughput: theta must be > 0");
  if (!(coverage >= 0.0 && coverage <= 1.0)) {
    throw DomainError("throughput: coverage must lie in [0, 1]");
  }
  const double rate = base == LogBase::Natural ? std::log1p(theta) : std::log1p(theta) / std::numbers::ln2;
  return rate * coverage;
}

double crossing_db(const CcdfCurve& curve, double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("crossing_db: level must lie in (0, 1)");
  if (curve.theta.size() != curve.values.size() || curve.theta.size() < 2) {
    throw DomainError("crossing_db: need at least two grid points");
  }
  for (std::size_t i = 0; i + 1 < curve.theta.size(); ++i) {
    const double y0 = curve.values[i];
    const double y1 = curve.values[i + 1];
    if (y0 >= level && y1 <= level && y0 > y1) {
      const double x0 = linear_to_db(curve.theta[i]);
      const double x1 = linear_to_db(curve.theta[i + 1]);
      return x0 + (y0 - level) / (y0 - y1) * (x1 - x0);
    }
    if (y0 == level && y1 == level) return linear_to_db(curve.theta[i]);
  }
  throw RangeError("crossing_db: level not bracketed by the curve");
}

double horizontal_shift_db(const CcdfCurve& a, const CcdfCurve& b, double level) {
  return crossing_db(a, level) - crossing_db(b, level);
}

double relative_gain_pct(double a, double b) {
  if (b == 0.0) throw DomainError("relative_gain_pct: undefined gain (reference is 0)");
  return 100.0 * (a - b) / b;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_distance: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double f = cdf(samples[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i) / n),
                  std::abs(static_cast<double>(j) / n - f)});
    i = j;
  }
  return d;
}

std::optional<std::size_t> find_interior_extremum(const std::vector<double>& xs,
                                                  const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw DomainError("find_interior_extremum: size mismatch");
  if (ys.size() < 3) throw DomainError("find_interior_extremum: need at least 3 points");
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    const bool minimum = ys[i] < ys[i - 1] && ys[i] < ys[i + 1];
    const bool maximum = ys[i] > ys[i - 1] && ys[i] > ys[i + 1];
    if (minimum || maximum) return i;
  }
  return std::nullopt;
}

}  // namespace isac
