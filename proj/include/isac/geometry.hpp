#pragma once

#include <vector>

#include "isac/params.hpp"
#include "isac/rng.hpp"

namespace isac {

// Typical-cell correction of the tUE link-distance law.
inline constexpr double kCellCorrection = 13.0 / 10.0;

struct LinkDistances {
  double r0 = 0.0;       // tBS -> tUE
  double r3 = 0.0;       // tBS -> tRad
  double phi = 0.0;      // angle at the target, [0, 2 pi)
  double rho = 0.0;      // tBS -> nearest interferer
  double rho_r = 0.0;    // tRad -> nearest interferer
  double rho_rad = 0.0;  // radar-only tRad -> nearest interferer
};

// Distances from a receiver to the points of a PPP outside the guard
// radius, optionally with one extra point exactly on the guard circle.
struct InterfererField {
  std::vector<double> distances;
  double guard = 0.0;
  bool includes_edge_point = false;
};

// tBS -> tUE distance: Rayleigh with parameter pi b lambda.
double pdf_r0(double x, const NetworkParams& params);
double cdf_r0(double x, const NetworkParams& params);
double sample_r0(const NetworkParams& params, Rng& rng);

double r3_from_angle(double r1, double r2, double phi);

// Scaled-and-translated arccos approximation of the R3 law. cdf is clamped
// to {0, 1} outside [|r1 - r2|, r1 + r2]; pdf is 0 there.
double cdf_r3(double r, double r1, double r2);
double pdf_r3(double r, double r1, double r2);
// Exact inverse of cdf_r3: min(r1,r2) (1 - cos(pi u)) + |r1 - r2|.
double r3_from_quantile(double u, double r1, double r2);
double sample_r3(double r1, double r2, Rng& rng);
// R3 from a uniform angle, i.e. the true law the approximation targets.
double sample_r3_exact(double r1, double r2, Rng& rng, double* phi_out = nullptr);

// Nearest-interferer distance of a PPP seen from a point of the process.
double pdf_rho(double r, const NetworkParams& params);
double ccdf_rho(double r, const NetworkParams& params);
double sample_rho(const NetworkParams& params, Rng& rng);

// Nearest interferer of the tRad given no interferer closer than r3.
double pdf_rho_r_given_r3(double r, double r3, const NetworkParams& params);
double ccdf_rho_r_given_r3(double r, double r3, const NetworkParams& params);
double sample_rho_r(double r3, const NetworkParams& params, Rng& rng);

// PPP of intensity lambda on the annulus psi <= r <= r_max, plus one point
// at psi when with_edge_point is set.
InterfererField sample_interferer_field(double psi, const NetworkParams& params,
                                        double r_max, Rng& rng,
                                        bool with_edge_point = true);

// Default simulation window: truncated mean interference is < 0.1% for eta=4.
double default_window_radius(const NetworkParams& params);

}  // namespace isac
