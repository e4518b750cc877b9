#include "isac/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isac/errors.hpp"

namespace isac {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0)) throw DomainError(what);
}

}  // namespace

double pdf_r0(double x, const NetworkParams& params) {
  require_nonnegative(x, "pdf_r0: distance must be >= 0");
  const double a = kPi * kCellCorrection * params.lambda();
  return 2.0 * a * x * std::exp(-a * x * x);
}

double cdf_r0(double x, const NetworkParams& params) {
  require_nonnegative(x, "cdf_r0: distance must be >= 0");
  return -std::expm1(-kPi * kCellCorrection * params.lambda() * x * x);
}

double sample_r0(const NetworkParams& params, Rng& rng) {
  return std::sqrt(-std::log(uniform_open(rng)) /
                   (kPi * kCellCorrection * params.lambda()));
}

double r3_from_angle(double r1, double r2, double phi) {
  const double sq = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(phi);
  return std::sqrt(std::max(sq, 0.0));
}

double cdf_r3(double r, double r1, double r2) {
  const double lo = std::abs(r1 - r2);
  const double mn = std::min(r1, r2);
  if (r <= lo) return 0.0;
  if (r >= r1 + r2) return 1.0;
  const double arg = std::clamp(1.0 - (r - lo) / mn, -1.0, 1.0);
  return std::acos(arg) / kPi;
}

double pdf_r3(double r, double r1, double r2) {
  const double lo = std::abs(r1 - r2);
  const double mn = std::min(r1, r2);
  if (r <= lo || r >= r1 + r2) return 0.0;
  const double y = 1.0 + (lo - r) / mn;
  return 1.0 / (kPi * mn * std::sqrt(1.0 - y * y));
}

double r3_from_quantile(double u, double r1, double r2) {
  return std::min(r1, r2) * (1.0 - std::cos(kPi * u)) + std::abs(r1 - r2);
}

double sample_r3(double r1, double r2, Rng& rng) {
  return r3_from_quantile(uniform_open(rng), r1, r2);
}

double sample_r3_exact(double r1, double r2, Rng& rng, double* phi_out) {
  const double phi = 2.0 * kPi * uniform_open(rng);
  if (phi_out) *phi_out = phi;
  return r3_from_angle(r1, r2, phi);
}

double pdf_rho(double r, const NetworkParams& params) {
  require_nonnegative(r, "pdf_rho: distance must be >= 0");
  const double a = kPi * params.lambda();
  return 2.0 * a * r * std::exp(-a * r * r);
}

double ccdf_rho(double r, const NetworkParams& params) {
  require_nonnegative(r, "ccdf_rho: distance must be >= 0");
  return std::exp(-kPi * params.lambda() * r * r);
}

double sample_rho(const NetworkParams& params, Rng& rng) {
  return std::sqrt(-std::log(uniform_open(rng)) / (kPi * params.lambda()));
}

double pdf_rho_r_given_r3(double r, double r3, const NetworkParams& params) {
  require_nonnegative(r3, "pdf_rho_r_given_r3: r3 must be >= 0");
  if (r < r3) return 0.0;
  const double a = kPi * params.lambda();
  return 2.0 * a * r * std::exp(-a * (r * r - r3 * r3));
}

double ccdf_rho_r_given_r3(double r, double r3, const NetworkParams& params) {
  require_nonnegative(r3, "ccdf_rho_r_given_r3: r3 must be >= 0");
  if (r <= r3) return 1.0;
  return std::exp(-kPi * params.lambda() * (r * r - r3 * r3));
}

double sample_rho_r(double r3, const NetworkParams& params, Rng& rng) {
  require_nonnegative(r3, "sample_rho_r: r3 must be >= 0");
  return std::sqrt(r3 * r3 - std::log(uniform_open(rng)) / (kPi * params.lambda()));
}

InterfererField sample_interferer_field(double psi, const NetworkParams& params,
                                        double r_max, Rng& rng,
                                        bool with_edge_point) {
  if (!(psi >= 0.0) || !(psi < r_max)) {
    throw DomainError("sample_interferer_field: need 0 <= psi < r_max");
  }
  const double span = r_max * r_max - psi * psi;
  std::poisson_distribution<long> count(params.lambda() * kPi * span);
  const long n = count(rng);

  InterfererField field;
  field.guard = psi;
  field.includes_edge_point = with_edge_point;
  field.distances.reserve(static_cast<std::size_t>(n) + 1);
  if (with_edge_point) field.distances.push_back(psi);
  for (long i = 0; i < n; ++i) {
    field.distances.push_back(std::sqrt(psi * psi + uniform_open(rng) * span));
  }
  return field;
}

double default_window_radius(const NetworkParams& params) {
  return 30.0 / std::sqrt(kPi * params.lambda());
}

}  // namespace isac
