#include "isac/laplace.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "isac/errors.hpp"
#include "isac/hypergeometric.hpp"

namespace isac {

namespace {

constexpr double kPi = std::numbers::pi;

void check_args(double s, double psi) {
  if (!(s >= 0.0)) throw DomainError("interference LT: s must be >= 0");
  if (!(psi >= 0.0)) throw DomainError("interference LT: guard distance must be >= 0");
}

}  // namespace

double shot_noise_exponent(double s, double psi, const NetworkParams& params,
                           LtPath path) {
  check_args(s, psi);
  if (s == 0.0) return 0.0;
  const double lambda = params.lambda();
  const double delta = params.delta();
  if (psi == 0.0) {
    return kPi * lambda * std::pow(s, delta) * kPi * delta / std::sin(kPi * delta);
  }
  if (path == LtPath::Auto && params.eta() == 4.0) {
    const double root = std::sqrt(s);
    return kPi * lambda * root * std::atan(root / (psi * psi));
  }
  // s psi^(2-eta) = x psi^2 with x = s psi^-eta keeps large s well scaled.
  const double x = s * std::pow(psi, -params.eta());
  return 2.0 * kPi * lambda * psi * psi / (params.eta() - 2.0) * x *
         hyp2f1_interference(x, delta);
}

double lt_interference_guarded(double s, double psi, const NetworkParams& params,
                               LtPath path) {
  check_args(s, psi);
  if (s == 0.0) return 1.0;
  if (psi == 0.0) return 0.0;
  const double edge = 1.0 / (1.0 + s * std::pow(psi, -params.eta()));
  const double exponent = shot_noise_exponent(s, psi, params, path);
  // Below the smallest normal double; subnormal arithmetic is slow and
  // the value is zero for every purpose here.
  if (exponent > 708.0) return 0.0;
  const double v = std::exp(-exponent) * edge;
  return v < std::numeric_limits<double>::min() ? 0.0 : v;
}

double lt_interference_comm(double s, double r0, const NetworkParams& params,
                            LtPath path) {
  const double exponent = shot_noise_exponent(s, r0, params, path);
  return exponent > 708.0 ? 0.0 : std::exp(-exponent);
}

}  // namespace isac
