#include <cmath>

#include "doctest.h"
#include "isac/errors.hpp"
#include "isac/params.hpp"

using namespace isac;

namespace {

NetworkParams with(double p_h, int m, double p_l = 1.0) {
  NetworkSettings s;
  s.p_h = p_h;
  s.m_slots = m;
  s.p_l = p_l;
  return NetworkParams(s);
}

}  // namespace

TEST_CASE("p_avg reference values") {
  CHECK(p_avg(with(5.0, 10)) == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(p_avg(with(1.0, 7)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p_avg(with(10.0, 5)) == doctest::Approx(2.8).epsilon(1e-15));
}

TEST_CASE("p_avg lies in [p_l, p_h] and decreases towards p_l with M") {
  double prev = p_avg(with(5.0, 2, 1.5));
  for (int m = 3; m <= 200; ++m) {
    const double v = p_avg(with(5.0, m, 1.5));
    CHECK(v <= prev);
    CHECK(v >= 1.5);
    CHECK(v <= 5.0);
    prev = v;
  }
  CHECK(prev == doctest::Approx(1.5).epsilon(0.02));
}

TEST_CASE("P_avg / P_h is bit-identical under swapping P_h and M when P_l = 1") {
  for (int a = 2; a <= 12; ++a) {
    for (int b = 2; b <= 12; ++b) {
      CHECK(p_avg_over_p_h(with(a, b)) == p_avg_over_p_h(with(b, a)));
    }
  }
  CHECK(p_avg_over_p_h(with(5.0, 10)) == p_avg_over_p_h(with(10.0, 5)));
  CHECK(p_avg_over_p_h(with(3.0, 8)) == p_avg_over_p_h(with(8.0, 3)));
}

TEST_CASE("dB conversions") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(-40.0) == doctest::Approx(1e-4).epsilon(1e-14));
  CHECK(linear_to_db(db_to_linear(3.7)) == doctest::Approx(3.7).epsilon(1e-12));
  CHECK_THROWS_AS(linear_to_db(0.0), DomainError);
  CHECK_THROWS_AS(linear_to_db(-1.0), DomainError);
}

TEST_CASE("parameter validation") {
  NetworkSettings s;
  s.lambda = 0.0;
  CHECK_THROWS_AS(NetworkParams{s}, DomainError);
  s = {};
  s.eta = 2.0;
  CHECK_THROWS_AS(NetworkParams{s}, DomainError);
  s = {};
  s.p_h = 0.5;
  CHECK_THROWS_AS(NetworkParams{s}, DomainError);
  s = {};
  s.m_slots = 1;
  CHECK_THROWS_AS(NetworkParams{s}, DomainError);
  s = {};
  s.sigma2 = -1.0;
  CHECK_THROWS_AS(NetworkParams{s}, DomainError);
  s = {};
  s.eta = 3.0;
  CHECK(NetworkParams(s).delta() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("geometry in units of v") {
  const auto g = ScenarioGeometry::from_units(1e-5, 5.0, 15.0, 5.0);
  const double v = 1.0 / (60.0 * std::sqrt(1e-5));
  CHECK(g.v() == doctest::Approx(v));
  CHECK(g.r1() == doctest::Approx(5.0 * v));
  CHECK(g.r2() == doctest::Approx(15.0 * v));
  CHECK(ScenarioGeometry::from_units(1e-5, 2.0, 3.0, 4.0, 1.0).r2() == 3.0);
  CHECK_THROWS_AS(ScenarioGeometry(0.0, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("mode tags round-trip") {
  for (SinrMode m : kAllModes) {
    const auto parsed = parse_mode(to_string(m));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == m);
  }
  CHECK_FALSE(parse_mode("Bistatic").has_value());
  CHECK(is_joint(SinrMode::JointDts));
  CHECK(is_comm(SinrMode::CommNoDts));
  CHECK(uses_dts(SinrMode::MonoDts));
  CHECK_FALSE(uses_dts(SinrMode::RadarOnly));
}
