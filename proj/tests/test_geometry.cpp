#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "isac/errors.hpp"
#include "isac/geometry.hpp"
#include "isac/metrics.hpp"
#include "oracles.hpp"

using namespace isac;

namespace {

const NetworkParams kParams;
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("R0 law: pdf integrates to the cdf and samples follow it") {
  const double scale = 1.0 / std::sqrt(kPi * kCellCorrection * kParams.lambda());
  for (double x : {0.3 * scale, scale, 2.5 * scale}) {
    const double integral = oracle::simpson([&](double r) { return pdf_r0(r, kParams); }, 0.0, x);
    CHECK(integral == doctest::Approx(cdf_r0(x, kParams)).epsilon(1e-10));
  }
  CHECK(cdf_r0(scale, kParams) == doctest::Approx(1.0 - std::exp(-1.0)));

  Rng rng = make_stream(7, 0, Stream::Comm);
  std::vector<double> xs(200000);
  for (double& x : xs) x = sample_r0(kParams, rng);
  CHECK(ks_distance(xs, [](double x) { return cdf_r0(x, kParams); }) < 0.005);
}

TEST_CASE("R3 approximation: support, endpoints, quantile inverse, symmetry") {
  const double r1 = 5.0, r2 = 15.0;
  CHECK(cdf_r3(10.0, r1, r2) == 0.0);
  CHECK(cdf_r3(20.0, r1, r2) == 1.0);
  CHECK(cdf_r3(9.0, r1, r2) == 0.0);
  CHECK(cdf_r3(21.0, r1, r2) == 1.0);
  CHECK(cdf_r3(15.0, r1, r2) == doctest::Approx(0.5));
  for (double u : {0.01, 0.2, 0.5, 0.77, 0.99}) {
    CHECK(cdf_r3(r3_from_quantile(u, r1, r2), r1, r2) == doctest::Approx(u).epsilon(1e-12));
  }
  for (double r = 10.0; r <= 20.0; r += 0.25) {
    CHECK(cdf_r3(r, r1, r2) == cdf_r3(r, r2, r1));
    CHECK(pdf_r3(r, r1, r2) == pdf_r3(r, r2, r1));
  }
  // r = 15 - 5 cos(pi u) removes the inverse-square-root endpoint spikes.
  const double mass = oracle::simpson(
      [&](double u) {
        return pdf_r3(15.0 - 5.0 * std::cos(kPi * u), r1, r2) * 5.0 * kPi * std::sin(kPi * u);
      },
      1e-9, 1.0 - 1e-9);
  for (double r : {10.5, 13.0, 17.5, 19.5}) {
    const double h = 1e-5;
    CHECK(pdf_r3(r, r1, r2) ==
          doctest::Approx((cdf_r3(r + h, r1, r2) - cdf_r3(r - h, r1, r2)) / (2 * h)).epsilon(1e-6));
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("R3 approximation vs the exact uniform-angle law") {
  // The arccos law is an approximation; at (5v, 15v) its KS distance to the
  // law of |r1 e^{i a} + r2 e^{i b}| is about 0.055.
  Rng rng = make_stream(3, 0, Stream::Bistatic);
  std::vector<double> xs(200000);
  for (double& x : xs) x = sample_r3_exact(5.0, 15.0, rng);
  const double ks = ks_distance(xs, [](double x) { return cdf_r3(x, 5.0, 15.0); });
  CHECK(ks > 0.04);
  CHECK(ks < 0.07);
  for (double x : xs) {
    CHECK(x >= 10.0 - 1e-9);
    CHECK(x <= 20.0 + 1e-9);
  }
}

TEST_CASE("rho and rho_r laws") {
  const double scale = 1.0 / std::sqrt(kPi * kParams.lambda());
  CHECK(ccdf_rho(scale, kParams) == doctest::Approx(std::exp(-1.0)));
  const double r3 = 0.7 * scale;
  CHECK(ccdf_rho_r_given_r3(r3, r3, kParams) == 1.0);
  CHECK(ccdf_rho_r_given_r3(0.5 * r3, r3, kParams) == 1.0);
  CHECK(pdf_rho_r_given_r3(0.5 * r3, r3, kParams) == 0.0);
  const double integral =
      oracle::simpson([&](double r) { return pdf_rho_r_given_r3(r, r3, kParams); }, r3, 2.0 * scale);
  CHECK(integral == doctest::Approx(1.0 - ccdf_rho_r_given_r3(2.0 * scale, r3, kParams)).epsilon(1e-9));

  Rng rng = make_stream(11, 0, Stream::Mono);
  std::vector<double> rho(100000), rr(100000);
  for (double& x : rho) x = sample_rho(kParams, rng);
  for (double& x : rr) {
    x = sample_rho_r(r3, kParams, rng);
    CHECK(x >= r3);
  }
  CHECK(ks_distance(rho, [&](double x) { return 1.0 - ccdf_rho(x, kParams); }) < 0.006);
  CHECK(ks_distance(rr, [&](double x) { return 1.0 - ccdf_rho_r_given_r3(x, r3, kParams); }) < 0.006);
}

TEST_CASE("interferer field: guard, edge point and mean count") {
  Rng rng = make_stream(5, 0, Stream::Mono);
  const double psi = 200.0, r_max = 2000.0;
  double total = 0.0;
  const int reps = 400;
  for (int i = 0; i < reps; ++i) {
    const auto f = sample_interferer_field(psi, kParams, r_max, rng, true);
    REQUIRE_FALSE(f.distances.empty());
    CHECK(f.distances.front() == psi);
    for (double d : f.distances) {
      CHECK(d >= psi);
      CHECK(d <= r_max);
    }
    total += static_cast<double>(f.distances.size() - 1);
  }
  const double mean = kParams.lambda() * kPi * (r_max * r_max - psi * psi);
  CHECK(total / reps == doctest::Approx(mean).epsilon(0.02));
  CHECK_THROWS_AS(sample_interferer_field(r_max, kParams, r_max, rng), DomainError);
  const auto no_edge = sample_interferer_field(psi, kParams, r_max, rng, false);
  CHECK_FALSE(no_edge.includes_edge_point);
}
