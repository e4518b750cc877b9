#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isac/ccdf.hpp"
#include "isac/fading.hpp"
#include "isac/geometry.hpp"
#include "isac/params.hpp"

namespace isac {

// A: draw every distance from the analytical laws. B: place nodes in a
// realized PPP and measure distances.
enum class Fidelity { A, B };

// Averaged: every DTS interferer transmits P_avg. Aloha: each BS owns one
// uniformly chosen high-power slot.
enum class InterfererPower { Averaged, Aloha };

// Exact: h_j = h1 h2, h_jr = h1^2 from Rayleigh h1, h2. Fitted: independent
// draws from the max-type fits, matching the analytical assumptions.
enum class FadingLaw { Exact, Fitted };

// Mode-A law of the tBS -> tRad distance.
enum class R3Law { Approximate, Exact };

struct SimConfig {
  long trials = 10000;
  std::uint64_t seed = 1;
  Fidelity fidelity = Fidelity::A;
  std::optional<double> r_max;  // window radius in metres
  InterfererPower interferer_power = InterfererPower::Averaged;
  bool reject_outside_cell = true;
  FadingLaw fading = FadingLaw::Exact;
  R3Law r3_law = R3Law::Approximate;
  unsigned threads = 0;  // 0: ISAC_THREADS, else hardware concurrency
  FadingFit fit = FadingFit::standard();
  int max_attempts = 10000;
};

void validate(const SimConfig& config);
double window_radius(const SimConfig& config, const NetworkParams& params);
unsigned worker_count(const SimConfig& config);

struct Interferer {
  double distance = 0.0;
  double fading = 0.0;
  int high_slot = 0;
};

struct ReceiverField {
  double guard = 0.0;
  std::vector<Interferer> interferers;
};

// One network realization, shared by every mode of a trial. Slot 0 is the
// tBS's high-power slot.
struct TrialDraw {
  LinkDistances links;
  double h0 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double hj = 0.0;
  double hjr = 0.0;
  double h_r = 0.0;
  int avg_slot = 0;  // observation slot of CommAvg, uniform on [0, M)
  int low_slot = 1;  // observation slot of CommLow, uniform on [1, M)
  ReceiverField comm;
  ReceiverField bistatic;
  ReceiverField mono;
  ReceiverField radar_only;
};

// Which parts of a TrialDraw a set of modes reads.
struct DrawNeeds {
  bool comm = false;
  bool bistatic = false;
  bool mono = false;
  bool radar_only = false;

  static DrawNeeds of(const std::vector<SinrMode>& modes);
  bool isac_radar() const { return bistatic || mono; }
};

TrialDraw draw_trial_A(const DrawNeeds& needs, const NetworkParams& params,
                       const ScenarioGeometry& geom, const SimConfig& config, long trial);

// All requested parts from one attempt's network. *accepted is false when
// a radar placement falls outside the typical cell; radar parts are then
// unusable.
TrialDraw draw_trial_B(const DrawNeeds& needs, const NetworkParams& params,
                       const ScenarioGeometry& geom, const SimConfig& config, long trial,
                       int attempt, bool* accepted);

// Comm parts from attempt 0 (never rejected, so the tUE law is not
// conditioned on the radar geometry); ISAC radar and radar-only parts each
// from their first accepted attempt.
TrialDraw draw_trial_B_accepted(const DrawNeeds& needs, const NetworkParams& params,
                                const ScenarioGeometry& geom, const SimConfig& config,
                                long trial);

// SINR of one mode on a realization. Joint modes return the larger of the
// bistatic and monostatic SINR, so {joint > theta} is the union event.
double sinr(SinrMode mode, const TrialDraw& draw, const NetworkParams& params,
            const ScenarioGeometry& geom, const SimConfig& config);

double run_trial_A(SinrMode mode, const NetworkParams& params, const ScenarioGeometry& geom,
                   const SimConfig& config, long trial);
// nullopt when the placement is rejected.
std::optional<double> run_trial_B(SinrMode mode, const NetworkParams& params,
                                  const ScenarioGeometry& geom, const SimConfig& config,
                                  long trial, int attempt = 0);

CcdfCurve estimate_ccdf(std::vector<double> samples, const std::vector<double>& theta_grid,
                        SinrMode mode = SinrMode::CommAvg,
                        Provenance provenance = Provenance::SimulationA);

// samples[i][t] is the SINR of modes[i] in trial t.
std::vector<std::vector<double>> simulate(const std::vector<SinrMode>& modes,
                                          const NetworkParams& params,
                                          const ScenarioGeometry& geom,
                                          const SimConfig& config);

std::vector<CcdfCurve> run_campaign(const std::vector<SinrMode>& modes,
                                    const NetworkParams& params, const ScenarioGeometry& geom,
                                    const SimConfig& config,
                                    const std::vector<double>& theta_grid);

}  // namespace isac
