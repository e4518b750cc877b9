#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>

#include "doctest.h"
#include "isac/errors.hpp"
#include "isac/scenario.hpp"

using namespace isac;

namespace {

std::filesystem::path scenario_dir() {
  const char* dir = std::getenv("ISAC_SCENARIO_DIR");
  return dir ? std::filesystem::path(dir) : std::filesystem::path("scenarios");
}

// Location of the ParseError raised by `text`, or {0, 0}.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("the shipped scenario matches the built-in default") {
  const Scenario file = load_scenario(scenario_dir() / "default.ini");
  const Scenario def = default_scenario();
  CHECK(file.params.lambda() == def.params.lambda());
  CHECK(file.params.p_h() == 5.0);
  CHECK(file.params.m_slots() == 10);
  CHECK(file.geometry.r1() == doctest::Approx(def.geometry.r1()));
  CHECK(file.geometry.r2() == doctest::Approx(15.0 * file.geometry.v()));
  CHECK(file.theta_db == def.theta_db);
  CHECK(file.theta_db.size() == 31);
  CHECK(file.modes.size() == 11);
  CHECK(file.sim.trials == 10000);
  REQUIRE(file.sim.r_max);
  CHECK(*file.sim.r_max == doctest::Approx(30.0 / std::sqrt(std::numbers::pi * 1e-5)));
}

TEST_CASE("keys override defaults") {
  const Scenario sc = parse_scenario(
      "[network]\np_h = 10\nm_slots = 5\neps_mono = literal\n"
      "[geometry]\nr1_in_v = 2\nv_override = 1\n"
      "[thresholds]\ntheta_db_min = 0\ntheta_db_max = 0\n"
      "[simulation]\nfidelity = b\ntrials = 12\nfading = fitted\nr3_law = exact\n"
      "interferer_power = aloha\nreject_outside_cell = no\n"
      "[modes]\nCommAvg MonoDts\ninclude = RadarOnly\n");
  CHECK(sc.params.p_h() == 10.0);
  CHECK(sc.params.m_slots() == 5);
  CHECK(sc.sim.fit.eps_mono == FadingFit::standard(EpsMonoReading::Literal).eps_mono);
  CHECK(sc.geometry.r1() == 2.0);
  CHECK(sc.geometry.r2() == 15.0);
  CHECK(sc.theta_db == std::vector<double>{0.0});
  CHECK(sc.sim.fidelity == Fidelity::B);
  CHECK(sc.sim.trials == 12);
  CHECK(sc.sim.fading == FadingLaw::Fitted);
  CHECK(sc.sim.r3_law == R3Law::Exact);
  CHECK(sc.sim.interferer_power == InterfererPower::Aloha);
  CHECK_FALSE(sc.sim.reject_outside_cell);
  CHECK(sc.modes == std::vector<SinrMode>{SinrMode::CommAvg, SinrMode::MonoDts, SinrMode::RadarOnly});
}

TEST_CASE("errors carry line and column") {
  CHECK(error_at("[network]\np_hh = 5\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_at("[network]\n  p_h = five\n") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(error_at("# comment\n[netwrk]\n") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(error_at("p_h = 5\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("[network]\np_h = 5\np_h = 6\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_at("[modes]\ninclude = CommAvg, Nope\n") == std::pair<std::size_t, std::size_t>{2, 20});
  CHECK(error_at("[simulation]\nfidelity = c\n").first == 2);
  CHECK(error_at("[simulation]\ntrials = 0\n").first == 2);
  CHECK(error_at("[network]\np_h\n").first == 2);
  CHECK(error_at("[modes]\n").first != 0);
}

TEST_CASE("invalid parameters surface as parse errors") {
  CHECK(error_at("[network]\nlambda = -1\n").first == 2);
  CHECK(error_at("[network]\np_l = 1\np_h = 0.5\n").first == 2);
  CHECK(error_at("[network]\nm_slots = 0\n").first == 2);
  CHECK(error_at("[thresholds]\ntheta_db_step = 0\n").first == 2);
}

TEST_CASE("load_scenario reports unreadable files") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.ini"), IoError);
}

TEST_CASE("make_grid") {
  const auto g = make_grid(-50.0, 10.0, 2.0);
  CHECK(g.size() == 31);
  CHECK(g.front() == -50.0);
  CHECK(g.back() == doctest::Approx(10.0));
  CHECK(make_grid(0.5, 50.0, 0.5).size() == 100);
  CHECK(make_grid(1.0, 1.5, 1.0).size() == 1);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(make_grid(1.0, 0.0, 0.5), DomainError);
}
