#pragma once

#include "isac/params.hpp"

namespace isac {

// Auto takes the arctan closed form when eta == 4 and the hypergeometric
// expression otherwise; Hypergeometric always takes the latter.
enum class LtPath { Auto, Hypergeometric };

// -log of the Laplace transform of the unit-power Rayleigh shot noise of a
// PPP outside a disk of radius psi around the receiver:
//   2 pi lambda s psi^(2-eta) / (eta-2) * 2F1(1, 1-delta; 2-delta; -s psi^-eta).
// psi == 0 gives the unguarded value pi lambda s^delta pi delta / sin(pi delta).
double shot_noise_exponent(double s, double psi, const NetworkParams& params,
                           LtPath path = LtPath::Auto);

// Interference LT at a radar receiver whose nearest interferer sits at psi:
// the guarded PPP beyond psi times the edge factor 1/(1 + s psi^-eta).
double lt_interference_guarded(double s, double psi, const NetworkParams& params,
                               LtPath path = LtPath::Auto);

// Interference LT at the tUE, guard zone r0, no edge interferer.
double lt_interference_comm(double s, double r0, const NetworkParams& params,
                            LtPath path = LtPath::Auto);

}  // namespace isac
