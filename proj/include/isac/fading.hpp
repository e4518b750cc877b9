#pragma once

#include "isac/rng.hpp"

namespace isac {

// How the rate of the monostatic fading fit is read. MeanMatched uses
// harmonic(m_mono)/2, which gives the fitted law mean 2 = E[h1^2].
// Literal uses harmonic(m_bi)/2.
enum class EpsMonoReading { MeanMatched, Literal };

// Max-type fits F(x) = (1 - exp(-eps x))^m for the bistatic joint fading
// h_j = h1 h2 and the monostatic joint fading h_jr = h1^2.
struct FadingFit {
  double m_bi;
  double eps_bi;
  double m_mono;
  double eps_mono;

  static FadingFit standard(EpsMonoReading reading = EpsMonoReading::MeanMatched);
};

// Generalized harmonic number H_m = gamma + digamma(m + 1), m > 0.
double harmonic(double m);

double cdf_hj(double x, const FadingFit& fit = FadingFit::standard());
double ccdf_hj(double x, const FadingFit& fit = FadingFit::standard());
double cdf_hjr(double x, const FadingFit& fit = FadingFit::standard());
double ccdf_hjr(double x, const FadingFit& fit = FadingFit::standard());

// Exact Rayleigh-derived laws, used by the simulator.
double sample_exp(Rng& rng);
double sample_hj(Rng& rng);
double sample_hjr(Rng& rng);

// Draws from the fitted laws by inversion (simulation diagnostics only).
double sample_hj_fitted(const FadingFit& fit, Rng& rng);
double sample_hjr_fitted(const FadingFit& fit, Rng& rng);

}  // namespace isac
