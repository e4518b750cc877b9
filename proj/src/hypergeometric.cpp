#include "isac/hypergeometric.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "isac/errors.hpp"

namespace isac {

namespace {

constexpr int kMaxTerms = 4000;
constexpr double kTiny = std::numeric_limits<double>::epsilon() / 8.0;

// sum_{n>=0} (-y)^n / (n + a), 0 <= y <= 1/2.
double alternating_series(double y, double a) {
  double sum = 0.0;
  double power = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double term = power / (n + a);
    sum += term;
    if (std::abs(term) <= kTiny * std::abs(sum)) return sum;
    power *= -y;
  }
  throw NumericalFailure("hyp2f1_interference: series did not converge");
}

// 2F1(1, 1; c; y) = sum_n n! / (c)_n y^n, 0 <= y < 1.
double unit_params_series(double y, double c) {
  double sum = 1.0;
  double term = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (n + 1.0) / (c + n) * y;
    sum += term;
    if (term <= kTiny * sum) return sum;
  }
  throw NumericalFailure("hyp2f1_interference: Pfaff series did not converge");
}

}  // namespace

double hyp2f1_interference(double x, double delta) {
  if (!(x >= 0.0)) throw DomainError("hyp2f1_interference: x must be >= 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("hyp2f1_interference: delta must lie in (0, 1)");
  }
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;

  if (x <= 0.5) return (1.0 - delta) * alternating_series(x, 1.0 - delta);

  if (x < 2.0) {
    const double y = x / (1.0 + x);
    return unit_params_series(y, 2.0 - delta) / (1.0 + x);
  }

  const double leading = (1.0 - delta) * std::numbers::pi /
                         std::sin(std::numbers::pi * delta) * std::pow(x, delta - 1.0);
  const double correction = (1.0 - delta) / x * alternating_series(1.0 / x, delta);
  return leading - correction;
}

}  // namespace isac
