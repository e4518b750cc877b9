#include "isac/params.hpp"

#include <cmath>

#include "isac/errors.hpp"

namespace isac {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

NetworkParams::NetworkParams(const NetworkSettings& settings)
    : s_(settings), delta_(2.0 / settings.eta) {
  require(std::isfinite(s_.lambda) && s_.lambda > 0.0, "lambda must be > 0");
  require(std::isfinite(s_.eta) && s_.eta > 2.0, "eta must be > 2");
  require(std::isfinite(s_.sigma2) && s_.sigma2 >= 0.0, "sigma2 must be >= 0");
  require(std::isfinite(s_.p_l) && s_.p_l > 0.0, "p_l must be > 0");
  require(std::isfinite(s_.p_h) && s_.p_h >= s_.p_l, "p_h must be >= p_l");
  require(s_.m_slots >= 2, "m_slots must be >= 2");
  require(std::isfinite(s_.p_r) && s_.p_r > 0.0, "p_r must be > 0");
}

ScenarioGeometry::ScenarioGeometry(double r1, double r2, double r_r, double v)
    : r1_(r1), r2_(r2), r_r_(r_r), v_(v) {
  require(std::isfinite(r1) && r1 > 0.0, "r1 must be > 0");
  require(std::isfinite(r2) && r2 > 0.0, "r2 must be > 0");
  require(std::isfinite(r_r) && r_r > 0.0, "r_r must be > 0");
  require(std::isfinite(v) && v > 0.0, "v must be > 0");
}

double ScenarioGeometry::default_unit(double lambda) {
  require(lambda > 0.0, "lambda must be > 0");
  return 1.0 / (60.0 * std::sqrt(lambda));
}

ScenarioGeometry ScenarioGeometry::from_units(double lambda, double r1_in_v,
                                              double r2_in_v, double r_r_in_v,
                                              std::optional<double> v_override) {
  const double v = v_override ? *v_override : default_unit(lambda);
  return {r1_in_v * v, r2_in_v * v, r_r_in_v * v, v};
}

std::string_view to_string(SinrMode mode) {
  switch (mode) {
    case SinrMode::CommHigh: return "CommHigh";
    case SinrMode::CommLow: return "CommLow";
    case SinrMode::CommAvg: return "CommAvg";
    case SinrMode::CommNoDts: return "CommNoDts";
    case SinrMode::BistaticDts: return "BistaticDts";
    case SinrMode::MonoDts: return "MonoDts";
    case SinrMode::JointDts: return "JointDts";
    case SinrMode::BistaticNoDts: return "BistaticNoDts";
    case SinrMode::MonoNoDts: return "MonoNoDts";
    case SinrMode::JointNoDts: return "JointNoDts";
    case SinrMode::RadarOnly: return "RadarOnly";
  }
  return "?";
}

std::optional<SinrMode> parse_mode(std::string_view tag) {
  for (SinrMode m : kAllModes) {
    if (to_string(m) == tag) return m;
  }
  return std::nullopt;
}

bool is_comm(SinrMode mode) {
  return mode == SinrMode::CommHigh || mode == SinrMode::CommLow ||
         mode == SinrMode::CommAvg || mode == SinrMode::CommNoDts;
}

bool is_joint(SinrMode mode) {
  return mode == SinrMode::JointDts || mode == SinrMode::JointNoDts;
}

bool uses_dts(SinrMode mode) {
  switch (mode) {
    case SinrMode::CommHigh:
    case SinrMode::CommLow:
    case SinrMode::CommAvg:
    case SinrMode::BistaticDts:
    case SinrMode::MonoDts:
    case SinrMode::JointDts:
      return true;
    default:
      return false;
  }
}

double p_avg(const NetworkParams& params) {
  const double m = params.m_slots();
  return (params.p_h() + (m - 1.0) * params.p_l()) / m;
}

double p_avg_over_p_h(const NetworkParams& params) {
  const double m = params.m_slots();
  return (params.p_h() + (m - 1.0) * params.p_l()) / (m * params.p_h());
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) {
  if (!(x > 0.0)) throw DomainError("linear_to_db: argument must be > 0");
  return 10.0 * std::log10(x);
}

}  // namespace isac
