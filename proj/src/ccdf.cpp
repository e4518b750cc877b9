#include "isac/ccdf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "isac/geometry.hpp"
#include "isac/laplace.hpp"

namespace isac {

namespace {

constexpr double kPi = std::numbers::pi;

void require_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("ccdf: theta must be finite and > 0");
  }
}

// E_{R0}[ L_c(theta R0^eta k | R0) exp(-theta R0^eta noise) ] with
// R0^2 ~ Exp(pi b lambda); k is interference power over signal power and
// noise is sigma^2 over signal power.
double comm_ccdf(double theta, double k, double noise, const NetworkParams& params,
                 const QuadratureConfig& quad) {
  require_theta(theta);
  const double scale = 1.0 / (kPi * kCellCorrection * params.lambda());
  const double half_eta = params.eta() / 2.0;
  const auto integrand = [&](double t) {
    const double r0_sq = t * scale;
    const double r0_eta = std::pow(r0_sq, half_eta);
    const double s = theta * r0_eta * k;
    const double exponent = shot_noise_exponent(s, std::sqrt(r0_sq), params) +
                            theta * r0_eta * noise;
    return std::exp(-exponent);
  };
  return expect_exponential(integrand, quad, "communication ccdf");
}

// 1 - (1 - L(s|psi) e^{-noise})^m, evaluated without cancellation.
double detection_term(double s, double noise, double m, double psi,
                      const NetworkParams& params) {
  const double q = lt_interference_guarded(s, psi, params) * std::exp(-noise);
  if (q >= 1.0) return 1.0;
  return -std::expm1(m * std::log1p(-q));
}

// Receiver at a point of the process: nearest interferer rho ~ Rayleigh.
double nearest_guard_ccdf(double s, double noise, double m, const NetworkParams& params,
                          const QuadratureConfig& quad) {
  const double scale = 1.0 / (kPi * params.lambda());
  // The term switches on where psi^eta ~ s.
  const double knot = std::pow(s, params.delta()) / scale;
  return expect_exponential(
      [&](double t) { return detection_term(s, noise, m, std::sqrt(t * scale), params); },
      quad, "monostatic ccdf", knot);
}

// Bistatic receiver: outer expectation over R3 through its quantile
// function, inner over rho_r >= R3 via t = pi lambda (rho_r^2 - R3^2).
double bistatic_guard_ccdf(double s, double noise, double m, double r1, double r2,
                           const NetworkParams& params, const QuadratureConfig& quad) {
  const double scale = 1.0 / (kPi * params.lambda());
  const auto inner = [&](double u) {
    const double r3 = r3_from_quantile(u, r1, r2);
    const double r3_sq = r3 * r3;
    const double knot = (std::pow(s, params.delta()) - r3_sq) / scale;
    return expect_exponential(
        [&](double t) {
          return detection_term(s, noise, m, std::sqrt(r3_sq + t * scale), params);
        },
        quad, "bistatic ccdf (inner)", knot);
  };
  return integrate(inner, 0.0, 1.0, quad, "bistatic ccdf (outer)");
}

double bistatic(double theta, double power_ratio, double signal_power,
                const NetworkParams& params, const ScenarioGeometry& geom,
                const QuadratureConfig& quad, const FadingFit& fit) {
  require_theta(theta);
  const double eta = params.eta();
  // r1 r2 as one factor keeps the result bitwise symmetric under r1 <-> r2.
  const double base = fit.eps_bi * theta * std::pow(geom.r1() * geom.r2(), eta);
  // Quadrature round-off may step just outside [0, 1] near the limits.
  return std::clamp(bistatic_guard_ccdf(base * power_ratio, base * params.sigma2() / signal_power,
                                        fit.m_bi, geom.r1(), geom.r2(), params, quad),
                    0.0, 1.0);
}

double monostatic(double theta, double distance, double power_ratio, double signal_power,
                  const NetworkParams& params, const QuadratureConfig& quad,
                  const FadingFit& fit) {
  require_theta(theta);
  const double base = fit.eps_mono * theta * std::pow(distance, 2.0 * params.eta());
  return std::clamp(nearest_guard_ccdf(base * power_ratio, base * params.sigma2() / signal_power,
                                       fit.m_mono, params, quad),
                    0.0, 1.0);
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Analytic: return "analytic";
    case Provenance::SimulationA: return "simulation-A";
    case Provenance::SimulationB: return "simulation-B";
  }
  return "?";
}

double ccdf_comm_chi(double theta, PowerLevel chi, const NetworkParams& params,
                     const ScenarioGeometry& /*geom*/, const QuadratureConfig& quad) {
  const double p_chi = chi == PowerLevel::High ? params.p_h() : params.p_l();
  const double m = params.m_slots();
  const double k = (params.p_h() + (m - 1.0) * params.p_l()) / (m * p_chi);
  return comm_ccdf(theta, k, params.sigma2() / p_chi, params, quad);
}

double ccdf_comm_avg(double theta, const NetworkParams& params, const ScenarioGeometry& geom,
                     const QuadratureConfig& quad) {
  const double m = params.m_slots();
  const double high = ccdf_comm_chi(theta, PowerLevel::High, params, geom, quad);
  const double low = ccdf_comm_chi(theta, PowerLevel::Low, params, geom, quad);
  return high / m + (m - 1.0) / m * low;
}

double ccdf_comm_nodts(double theta, const NetworkParams& params,
                       const ScenarioGeometry& /*geom*/, const QuadratureConfig& quad) {
  return comm_ccdf(theta, 1.0, params.sigma2() / params.p_l(), params, quad);
}

double ccdf_bistatic_dts(double theta, const NetworkParams& params,
                         const ScenarioGeometry& geom, const QuadratureConfig& quad,
                         const FadingFit& fit) {
  return bistatic(theta, p_avg_over_p_h(params), params.p_h(), params, geom, quad, fit);
}

double ccdf_bistatic_nodts(double theta, const NetworkParams& params,
                           const ScenarioGeometry& geom, const QuadratureConfig& quad,
                           const FadingFit& fit) {
  return bistatic(theta, 1.0, params.p_l(), params, geom, quad, fit);
}

double ccdf_mono_dts(double theta, const NetworkParams& params, const ScenarioGeometry& geom,
                     const QuadratureConfig& quad, const FadingFit& fit) {
  return monostatic(theta, geom.r1(), p_avg_over_p_h(params), params.p_h(), params, quad, fit);
}

double ccdf_mono_nodts(double theta, const NetworkParams& params,
                       const ScenarioGeometry& geom, const QuadratureConfig& quad,
                       const FadingFit& fit) {
  return monostatic(theta, geom.r1(), 1.0, params.p_l(), params, quad, fit);
}

double ccdf_radar_only(double theta, const NetworkParams& params,
                       const ScenarioGeometry& geom, const QuadratureConfig& quad,
                       const FadingFit& fit) {
  return monostatic(theta, geom.r_r(), 1.0, params.p_r(), params, quad, fit);
}

double ccdf_joint(double bistatic, double mono) {
  if (!(bistatic >= 0.0 && bistatic <= 1.0) || !(mono >= 0.0 && mono <= 1.0)) {
    throw DomainError("ccdf_joint: probabilities must lie in [0, 1]");
  }
  return bistatic + mono - bistatic * mono;
}

double ccdf(SinrMode mode, double theta, const NetworkParams& params,
            const ScenarioGeometry& geom, const QuadratureConfig& quad,
            const FadingFit& fit) {
  switch (mode) {
    case SinrMode::CommHigh:
      return ccdf_comm_chi(theta, PowerLevel::High, params, geom, quad);
    case SinrMode::CommLow:
      return ccdf_comm_chi(theta, PowerLevel::Low, params, geom, quad);
    case SinrMode::CommAvg:
      return ccdf_comm_avg(theta, params, geom, quad);
    case SinrMode::CommNoDts:
      return ccdf_comm_nodts(theta, params, geom, quad);
    case SinrMode::BistaticDts:
      return ccdf_bistatic_dts(theta, params, geom, quad, fit);
    case SinrMode::MonoDts:
      return ccdf_mono_dts(theta, params, geom, quad, fit);
    case SinrMode::JointDts:
      return ccdf_joint(ccdf_bistatic_dts(theta, params, geom, quad, fit),
                        ccdf_mono_dts(theta, params, geom, quad, fit));
    case SinrMode::BistaticNoDts:
      return ccdf_bistatic_nodts(theta, params, geom, quad, fit);
    case SinrMode::MonoNoDts:
      return ccdf_mono_nodts(theta, params, geom, quad, fit);
    case SinrMode::JointNoDts:
      return ccdf_joint(ccdf_bistatic_nodts(theta, params, geom, quad, fit),
                        ccdf_mono_nodts(theta, params, geom, quad, fit));
    case SinrMode::RadarOnly:
      return ccdf_radar_only(theta, params, geom, quad, fit);
  }
  throw DomainError("ccdf: unknown mode");
}

CcdfCurve evaluate(const CcdfRequest& request) {
  const auto& grid = request.theta_grid;
  if (grid.empty()) throw DomainError("ccdf: theta grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_theta(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DomainError("ccdf: theta grid must be strictly increasing");
    }
  }

  CcdfCurve curve;
  curve.mode = request.mode;
  curve.provenance = Provenance::Analytic;
  curve.theta = grid;
  curve.values.reserve(grid.size());
  for (double theta : grid) {
    curve.values.push_back(ccdf(request.mode, theta, request.params, request.geometry,
                                request.quad, request.fit));
  }

  // Quadrature noise is allowed up to the absolute tolerance.
  const double slack = 10.0 * request.quad.abs_tol;
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    const double v = curve.values[i];
    const bool in_range = v >= -slack && v <= 1.0 + slack;
    const bool monotone = i == 0 || v <= curve.values[i - 1] + slack;
    if (!in_range || !monotone) {
      std::ostringstream msg;
      msg << "ccdf post-check failed for " << to_string(request.mode) << " at theta="
          << grid[i] << ": value=" << v;
      if (i > 0) msg << " previous=" << curve.values[i - 1];
      throw NumericalFailure(msg.str());
    }
    curve.values[i] = std::clamp(v, 0.0, 1.0);
  }
  return curve;
}

}  // namespace isac
