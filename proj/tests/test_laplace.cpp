#include <cmath>
#include <numbers>

#include "doctest.h"
#include "isac/errors.hpp"
#include "isac/fading.hpp"
#include "isac/geometry.hpp"
#include "isac/laplace.hpp"
#include "oracles.hpp"

using namespace isac;

namespace {

constexpr double kPi = std::numbers::pi;

NetworkParams with_eta(double eta) {
  NetworkSettings s;
  s.eta = eta;
  return NetworkParams(s);
}

// 2 pi lambda int_psi^inf s x / (x^eta + s) dx with x = psi / w.
double pgfl_exponent(double s, double psi, double lambda, double eta) {
  const double v = oracle::simpson(
      [&](double w) {
        return s * psi * psi * std::pow(w, eta - 3.0) / (std::pow(psi, eta) + s * std::pow(w, eta));
      },
      0.0, 1.0, 200000);
  return 2.0 * kPi * lambda * v;
}

}  // namespace

TEST_CASE("shot-noise exponent equals the PGFL integral") {
  for (double eta : {3.0, 3.5, 4.0, 5.0}) {
    const auto p = with_eta(eta);
    for (double psi : {20.0, 150.0, 600.0}) {
      for (double s : {1e2, std::pow(psi, eta) * 0.3, std::pow(psi, eta) * 40.0}) {
        CAPTURE(eta);
        CAPTURE(psi);
        CAPTURE(s);
        CHECK(shot_noise_exponent(s, psi, p) ==
              doctest::Approx(pgfl_exponent(s, psi, p.lambda(), eta)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("eta = 4 arctan path matches the hypergeometric path") {
  const auto p = with_eta(4.0);
  for (double psi : {1.0, 50.0, 400.0}) {
    for (double s = 1e-3; s < 1e16; s *= 17.0) {
      const double a = shot_noise_exponent(s, psi, p, LtPath::Auto);
      const double h = shot_noise_exponent(s, psi, p, LtPath::Hypergeometric);
      CHECK(a == doctest::Approx(h).epsilon(1e-9));
    }
  }
}

TEST_CASE("limits") {
  const auto p = with_eta(4.0);
  CHECK(lt_interference_guarded(0.0, 100.0, p) == 1.0);
  CHECK(lt_interference_comm(0.0, 100.0, p) == 1.0);
  CHECK(lt_interference_guarded(1.0, 0.0, p) == 0.0);
  // Unguarded: pi lambda sqrt(s) pi/2 for eta = 4.
  CHECK(shot_noise_exponent(4.0, 0.0, p) == doctest::Approx(kPi * p.lambda() * 2.0 * kPi / 2.0));
  // Small psi approaches the unguarded value.
  CHECK(shot_noise_exponent(1e6, 1e-3, with_eta(3.0)) ==
        doctest::Approx(shot_noise_exponent(1e6, 0.0, with_eta(3.0))).epsilon(1e-6));
  CHECK_THROWS_AS(lt_interference_guarded(-1.0, 1.0, p), DomainError);
  CHECK_THROWS_AS(lt_interference_guarded(1.0, -1.0, p), DomainError);
}

TEST_CASE("guarded LT matches a simulated field with an edge interferer") {
  const auto p = with_eta(4.0);
  const double psi = 120.0;
  const double s = std::pow(psi, 4) * 0.8;
  Rng rng = make_stream(31, 0, Stream::Mono);
  const int n = 40000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto f = sample_interferer_field(psi, p, 30.0 / std::sqrt(kPi * p.lambda()), rng, true);
    double interference = 0.0;
    for (double d : f.distances) interference += sample_exp(rng) * std::pow(d, -4.0);
    const double e = std::exp(-s * interference);
    sum += e;
    sum2 += e * e;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  CHECK(std::abs(mean - lt_interference_guarded(s, psi, p)) < 4.0 * se + 1e-4);
}
