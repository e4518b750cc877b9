#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "isac/fading.hpp"
#include "isac/params.hpp"
#include "isac/quadrature.hpp"

namespace isac {

enum class Provenance { Analytic, SimulationA, SimulationB };

std::string_view to_string(Provenance p);

// ccdf values on a linear theta grid. std_error is present for simulated
// curves only.
struct CcdfCurve {
  SinrMode mode = SinrMode::CommAvg;
  Provenance provenance = Provenance::Analytic;
  std::vector<double> theta;
  std::vector<double> values;
  std::optional<std::vector<double>> std_error;
};

struct CcdfRequest {
  SinrMode mode;
  std::vector<double> theta_grid;  // linear, strictly increasing, > 0
  NetworkParams params;
  ScenarioGeometry geometry;
  QuadratureConfig quad = {};
  FadingFit fit = FadingFit::standard();
};

enum class PowerLevel { Low, High };

// Communication mode when the tBS transmits with P_chi under DTS.
double ccdf_comm_chi(double theta, PowerLevel chi, const NetworkParams& params,
                     const ScenarioGeometry& geom, const QuadratureConfig& quad = {});
// Slot-weighted average: (1/M) high + ((M-1)/M) low.
double ccdf_comm_avg(double theta, const NetworkParams& params,
                     const ScenarioGeometry& geom, const QuadratureConfig& quad = {});
double ccdf_comm_nodts(double theta, const NetworkParams& params,
                       const ScenarioGeometry& geom, const QuadratureConfig& quad = {});

double ccdf_bistatic_dts(double theta, const NetworkParams& params,
                         const ScenarioGeometry& geom, const QuadratureConfig& quad = {},
                         const FadingFit& fit = FadingFit::standard());
double ccdf_bistatic_nodts(double theta, const NetworkParams& params,
                           const ScenarioGeometry& geom, const QuadratureConfig& quad = {},
                           const FadingFit& fit = FadingFit::standard());
double ccdf_mono_dts(double theta, const NetworkParams& params,
                     const ScenarioGeometry& geom, const QuadratureConfig& quad = {},
                     const FadingFit& fit = FadingFit::standard());
double ccdf_mono_nodts(double theta, const NetworkParams& params,
                       const ScenarioGeometry& geom, const QuadratureConfig& quad = {},
                       const FadingFit& fit = FadingFit::standard());
double ccdf_radar_only(double theta, const NetworkParams& params,
                       const ScenarioGeometry& geom, const QuadratureConfig& quad = {},
                       const FadingFit& fit = FadingFit::standard());

// Union of two detection events taken as independent: b + m - b m.
double ccdf_joint(double bistatic, double mono);

double ccdf(SinrMode mode, double theta, const NetworkParams& params,
            const ScenarioGeometry& geom, const QuadratureConfig& quad = {},
            const FadingFit& fit = FadingFit::standard());

// Evaluates the whole grid, then checks values lie in [0, 1] and are
// nonincreasing in theta (NumericalFailure otherwise).
CcdfCurve evaluate(const CcdfRequest& request);

}  // namespace isac
