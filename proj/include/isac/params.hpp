#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace isac {

// Plain settings used to build a NetworkParams. Defaults are the
// interference-limited reference scenario (lambda = 1e-5 per m^2, eta = 4,
// P_l = 1, DTS with P_h = 5 over M = 10 slots).
struct NetworkSettings {
  double lambda = 1e-5;
  double eta = 4.0;
  double sigma2 = 0.0;
  double p_l = 1.0;
  double p_h = 5.0;
  int m_slots = 10;
  double p_r = 1.0;
};

/// Network-wide PPP, channel and power constants. All powers are linear.
/// Validated on construction and immutable afterwards.
class NetworkParams {
 public:
  NetworkParams() : NetworkParams(NetworkSettings{}) {}
  explicit NetworkParams(const NetworkSettings& settings);

  double lambda() const noexcept { return s_.lambda; }
  double eta() const noexcept { return s_.eta; }
  double delta() const noexcept { return delta_; }
  double sigma2() const noexcept { return s_.sigma2; }
  double p_l() const noexcept { return s_.p_l; }
  double p_h() const noexcept { return s_.p_h; }
  int m_slots() const noexcept { return s_.m_slots; }
  double p_r() const noexcept { return s_.p_r; }

  const NetworkSettings& settings() const noexcept { return s_; }

 private:
  NetworkSettings s_;
  double delta_;
};

/// Fixed link distances in metres: r1 (tBS to target), r2 (target to
/// radar), r_r (radar-only network, radar to target), and the distance
/// unit v that scenario files express them in.
class ScenarioGeometry {
 public:
  ScenarioGeometry(double r1, double r2, double r_r, double v);

  // v = 1/(60 sqrt(lambda)).
  static double default_unit(double lambda);

  // Distances given as multiples of v. v defaults to default_unit(lambda).
  static ScenarioGeometry from_units(double lambda, double r1_in_v,
                                     double r2_in_v, double r_r_in_v,
                                     std::optional<double> v_override = {});

  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }
  double r_r() const noexcept { return r_r_; }
  double v() const noexcept { return v_; }

  ScenarioGeometry with_r1(double r1) const { return {r1, r2_, r_r_, v_}; }
  ScenarioGeometry with_r2(double r2) const { return {r1_, r2, r_r_, v_}; }
  ScenarioGeometry with_r_r(double r_r) const { return {r1_, r2_, r_r, v_}; }

 private:
  double r1_;
  double r2_;
  double r_r_;
  double v_;
};

enum class SinrMode {
  CommHigh,
  CommLow,
  CommAvg,
  CommNoDts,
  BistaticDts,
  MonoDts,
  JointDts,
  BistaticNoDts,
  MonoNoDts,
  JointNoDts,
  RadarOnly,
};

inline constexpr std::array<SinrMode, 11> kAllModes = {
    SinrMode::CommHigh,      SinrMode::CommLow,     SinrMode::CommAvg,
    SinrMode::CommNoDts,     SinrMode::BistaticDts, SinrMode::MonoDts,
    SinrMode::JointDts,      SinrMode::BistaticNoDts, SinrMode::MonoNoDts,
    SinrMode::JointNoDts,    SinrMode::RadarOnly,
};

std::string_view to_string(SinrMode mode);
std::optional<SinrMode> parse_mode(std::string_view tag);

bool is_comm(SinrMode mode);
bool is_joint(SinrMode mode);
bool uses_dts(SinrMode mode);

// Mean interferer power under DTS: (P_h + (M-1) P_l) / M.
double p_avg(const NetworkParams& params);

// (P_h + (M-1) P_l) / (M P_h), computed in one expression so that swapping
// the numeric values of P_h and M (with P_l = 1) gives a bit-identical
// result.
double p_avg_over_p_h(const NetworkParams& params);

double db_to_linear(double x_db);
double linear_to_db(double x);

}  // namespace isac
