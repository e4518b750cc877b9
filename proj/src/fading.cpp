#include "isac/fading.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>

#include "isac/errors.hpp"

namespace isac {

namespace {

double max_type_cdf(double x, double m, double eps) {
  if (!(x > 0.0)) return 0.0;
  return std::pow(-std::expm1(-eps * x), m);
}

// 1 - (1 - e^{-eps x})^m without cancellation in the upper tail.
double max_type_ccdf(double x, double m, double eps) {
  if (!(x > 0.0)) return 1.0;
  return -std::expm1(m * std::log1p(-std::exp(-eps * x)));
}

double max_type_quantile(double u, double m, double eps) {
  return -std::log1p(-std::pow(u, 1.0 / m)) / eps;
}

}  // namespace

double harmonic(double m) {
  if (!(m > 0.0)) throw DomainError("harmonic: m must be > 0");
  return std::numbers::egamma + boost::math::digamma(m + 1.0);
}

FadingFit FadingFit::standard(EpsMonoReading reading) {
  FadingFit fit{};
  fit.m_bi = std::sqrt(7.0 / 20.0);
  fit.eps_bi = harmonic(fit.m_bi);
  fit.m_mono = std::sqrt(3.0 / 20.0);
  fit.eps_mono = reading == EpsMonoReading::MeanMatched ? harmonic(fit.m_mono) / 2.0
                                                        : harmonic(fit.m_bi) / 2.0;
  return fit;
}

double cdf_hj(double x, const FadingFit& fit) { return max_type_cdf(x, fit.m_bi, fit.eps_bi); }
double ccdf_hj(double x, const FadingFit& fit) { return max_type_ccdf(x, fit.m_bi, fit.eps_bi); }
double cdf_hjr(double x, const FadingFit& fit) { return max_type_cdf(x, fit.m_mono, fit.eps_mono); }
double ccdf_hjr(double x, const FadingFit& fit) {
  return max_type_ccdf(x, fit.m_mono, fit.eps_mono);
}

double sample_exp(Rng& rng) { return -std::log(uniform_open(rng)); }

double sample_hj(Rng& rng) {
  const double h1 = sample_exp(rng);
  return h1 * sample_exp(rng);
}

double sample_hjr(Rng& rng) {
  const double h1 = sample_exp(rng);
  return h1 * h1;
}

double sample_hj_fitted(const FadingFit& fit, Rng& rng) {
  return max_type_quantile(uniform_open(rng), fit.m_bi, fit.eps_bi);
}

double sample_hjr_fitted(const FadingFit& fit, Rng& rng) {
  return max_type_quantile(uniform_open(rng), fit.m_mono, fit.eps_mono);
}

}  // namespace isac
