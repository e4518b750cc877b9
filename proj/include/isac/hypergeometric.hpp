#pragma once

namespace isac {

// 2F1(1, 1 - delta; 2 - delta; -x) for x >= 0 and 0 < delta < 1, the
// hypergeometric factor of the PPP shot-noise Laplace transform.
//
//   x <= 1/2      direct power series
//   1/2 < x < 2   Pfaff transformation, argument x/(1+x) in (1/3, 2/3)
//   x >= 2        z -> 1/z connection formula, argument 1/x <= 1/2
//
// Relative accuracy is a few ulp over the whole half-line.
double hyp2f1_interference(double x, double delta);

}  // namespace isac
