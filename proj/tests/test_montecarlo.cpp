#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <thread>
#include <vector>

#include "doctest.h"
#include "isac/ccdf.hpp"
#include "isac/errors.hpp"
#include "isac/metrics.hpp"
#include "isac/montecarlo.hpp"
#include "oracles.hpp"

using namespace isac;

namespace {

constexpr double kPi = std::numbers::pi;

ScenarioGeometry units(double r1, double r2, double rr = 5.0) {
  return ScenarioGeometry::from_units(1e-5, r1, r2, rr);
}

const std::vector<SinrMode> kModes(kAllModes.begin(), kAllModes.end());

bool bitwise_equal(const std::vector<std::vector<double>>& a,
                   const std::vector<std::vector<double>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].size() != b[k].size()) return false;
    if (std::memcmp(a[k].data(), b[k].data(), a[k].size() * sizeof(double)) != 0) return false;
  }
  return true;
}

// E[1 - (1 - e^{-s I})^m] without exchanging expectation and power:
// sum_k (-1)^{k+1} C(m, k) L(k s), eta = 4, rho Rayleigh.
double mono_exact_series(double theta, double r1, double lambda, double m, double eps) {
  const double s = eps * theta * std::pow(r1, 8);
  std::vector<double> coef;
  double c = m;  // (-1)^{k+1} C(m, k), all positive for 0 < m < 1
  for (int k = 1; k <= 4000; ++k) {
    coef.push_back(c);
    c *= (k - m) / (k + 1.0);
  }
  return oracle::expect_exp(
      [&](double t) {
        const double rho = std::sqrt(t / (kPi * lambda));
        double sum = 0.0;
        for (std::size_t k = 0; k < coef.size(); ++k) {
          sum += coef[k] * oracle::lt_guarded_eta4((k + 1.0) * s, rho, lambda);
        }
        return sum;
      },
      4000);
}

}  // namespace

TEST_CASE("estimate_ccdf") {
  const auto c = estimate_ccdf({1.0, 1.0, 1.0}, {0.5, 2.0});
  CHECK(c.values[0] == 1.0);
  CHECK((*c.std_error)[0] == 0.0);
  CHECK(c.values[1] == 0.0);

  Rng rng = make_stream(61, 0, Stream::Link);
  std::vector<double> coin(10000);
  for (double& x : coin) x = uniform_open(rng) < 0.5 ? 0.0 : 2.0;
  const auto b = estimate_ccdf(coin, {1.0});
  CHECK(std::abs(b.values[0] - 0.5) < 0.015);
  CHECK((*b.std_error)[0] == doctest::Approx(0.005).epsilon(0.01));
  CHECK_THROWS_AS(estimate_ccdf({}, {1.0}), DomainError);
}

TEST_CASE("single-term SINR with no interferers") {
  NetworkSettings s;
  s.sigma2 = 1.0;
  const NetworkParams p(s);
  const auto g = units(5, 15);
  TrialDraw d;
  d.links.r0 = 40.0;
  d.h0 = 0.7;
  d.hj = 1.3;
  d.hjr = 2.1;
  const SimConfig config;
  CHECK(sinr(SinrMode::CommNoDts, d, p, g, config) == doctest::Approx(1.0 * 0.7 * std::pow(40.0, -4)).epsilon(1e-15));
  CHECK(sinr(SinrMode::CommHigh, d, p, g, config) == doctest::Approx(5.0 * 0.7 * std::pow(40.0, -4)).epsilon(1e-15));
  CHECK(sinr(SinrMode::BistaticDts, d, p, g, config) ==
        doctest::Approx(5.0 * 1.3 * std::pow(g.r1() * g.r2(), -4)).epsilon(1e-15));
  CHECK(sinr(SinrMode::MonoNoDts, d, p, g, config) ==
        doctest::Approx(2.1 * std::pow(g.r1(), -8)).epsilon(1e-15));

  NetworkSettings loud = s;
  loud.sigma2 = 1e300;
  CHECK(sinr(SinrMode::CommAvg, d, NetworkParams(loud), g, config) < 1e-290);
}

TEST_CASE("interferer power models") {
  const NetworkParams p;  // P_l = 1, P_h = 5, M = 10
  const auto g = units(5, 15);
  TrialDraw d;
  d.links.r0 = 1.0;
  d.h0 = 1.0;
  d.mono.interferers = {{1.0, 1.0, 0}, {1.0, 1.0, 3}};
  d.hjr = std::pow(g.r1(), 8);
  SimConfig averaged;
  SimConfig aloha;
  aloha.interferer_power = InterfererPower::Aloha;
  // Signal P_h, two unit interferers.
  CHECK(sinr(SinrMode::MonoDts, d, p, g, averaged) == doctest::Approx(5.0 / (2.0 * 1.4)));
  CHECK(sinr(SinrMode::MonoDts, d, p, g, aloha) == doctest::Approx(5.0 / (5.0 + 1.0)));
  CHECK(sinr(SinrMode::MonoNoDts, d, p, g, aloha) == doctest::Approx(1.0 / 2.0));
}

TEST_CASE("determinism across runs and thread counts") {
  const NetworkParams p;
  const auto g = units(5, 15);
  for (Fidelity f : {Fidelity::A, Fidelity::B}) {
    SimConfig config;
    config.fidelity = f;
    config.trials = f == Fidelity::A ? 600 : 150;
    config.r_max = 8.0 / std::sqrt(kPi * p.lambda());
    config.seed = 99;
    config.threads = 1;
    const auto one = simulate(kModes, p, g, config);
    CHECK(bitwise_equal(one, simulate(kModes, p, g, config)));
    for (unsigned t : {2u, 3u, 8u}) {
      config.threads = t;
      CHECK(bitwise_equal(one, simulate(kModes, p, g, config)));
    }
    config.seed = 100;
    CHECK_FALSE(bitwise_equal(one, simulate(kModes, p, g, config)));
  }
}

TEST_CASE("single-mode trials reproduce the campaign draws") {
  const NetworkParams p;
  const auto g = units(5, 15);
  SimConfig config;
  config.trials = 50;
  config.threads = 1;
  const auto all = simulate(kModes, p, g, config);
  for (std::size_t k = 0; k < kModes.size(); ++k) {
    for (long t = 0; t < config.trials; t += 7) {
      CHECK(run_trial_A(kModes[k], p, g, config, t) == all[k][t]);
    }
  }
}

TEST_CASE("joint samples are the union of the detection events") {
  const NetworkParams p;
  const auto g = units(5, 7);
  SimConfig config;
  config.trials = 3000;
  const std::vector<SinrMode> modes = {SinrMode::BistaticDts, SinrMode::MonoDts, SinrMode::JointDts};
  const auto s = simulate(modes, p, g, config);
  for (long t = 0; t < config.trials; ++t) CHECK(s[2][t] == std::max(s[0][t], s[1][t]));
  std::vector<double> grid;
  for (double db = -50; db <= 0; db += 2) grid.push_back(db_to_linear(db));
  const auto c = run_campaign(modes, p, g, config, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(c[2].values[i] >= std::max(c[0].values[i], c[1].values[i]));
  }
}

TEST_CASE("SIR is invariant under rescaling every power") {
  NetworkSettings a;
  NetworkSettings b = a;
  b.p_l *= 3.0;
  b.p_h *= 3.0;
  b.p_r *= 3.0;
  const auto g = units(5, 15);
  SimConfig config;
  config.trials = 200;
  config.threads = 1;
  const std::vector<SinrMode> comm = {SinrMode::CommHigh, SinrMode::CommLow, SinrMode::CommAvg,
                                      SinrMode::CommNoDts};
  const auto x = simulate(comm, NetworkParams(a), g, config);
  const auto y = simulate(comm, NetworkParams(b), g, config);
  for (std::size_t k = 0; k < comm.size(); ++k) {
    for (long t = 0; t < config.trials; ++t) CHECK(x[k][t] == doctest::Approx(y[k][t]).epsilon(1e-12));
  }
}

TEST_CASE("mode A communication agrees with the analysis") {
  const NetworkParams p;
  const auto g = units(5, 15);
  SimConfig config;
  config.trials = 10000;
  config.seed = 7;
  std::vector<double> grid;
  for (double db = -30; db <= 20; db += 2) grid.push_back(db_to_linear(db));
  const std::vector<SinrMode> modes = {SinrMode::CommHigh, SinrMode::CommLow, SinrMode::CommAvg,
                                       SinrMode::CommNoDts};
  const auto sim = run_campaign(modes, p, g, config, grid);
  for (std::size_t k = 0; k < modes.size(); ++k) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double ana = ccdf(modes[k], grid[i], p, g);
      CHECK(std::abs(sim[k].values[i] - ana) <= std::max(3.0 * (*sim[k].std_error)[i], 0.01));
    }
  }
}

TEST_CASE("mode A monostatic with fitted fading matches the exact expectation") {
  // The simulator is exact for the fitted law; the analysis replaces
  // E[(1 - e^{-sI})^m] by (1 - E[e^{-sI}])^m and therefore sits below.
  const NetworkParams p;
  const auto g = units(5, 15);
  const auto fit = FadingFit::standard();
  SimConfig config;
  config.trials = 40000;
  config.fading = FadingLaw::Fitted;
  const std::vector<double> grid = {db_to_linear(-40.0), db_to_linear(-30.0)};
  const auto sim = run_campaign({SinrMode::MonoNoDts}, p, g, config, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double exact = mono_exact_series(grid[i], g.r1(), p.lambda(), fit.m_mono, fit.eps_mono);
    const double analysis = ccdf_mono_nodts(grid[i], p, g);
    CHECK(std::abs(sim[0].values[i] - exact) <= 3.5 * (*sim[0].std_error)[i]);
    CHECK(exact > analysis + 0.01);
  }
}

TEST_CASE("mode B: tUE distance follows the corrected Rayleigh law") {
  const NetworkParams p;
  SimConfig config;
  config.fidelity = Fidelity::B;
  config.r_max = 30.0 / std::sqrt(kPi * p.lambda());  // default window
  config.trials = 100000;
  const DrawNeeds needs = DrawNeeds::of({SinrMode::CommNoDts});
  std::vector<double> r0(config.trials);
  std::vector<std::thread> pool;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long t = w; t < config.trials; t += workers) {
        r0[t] = draw_trial_B_accepted(needs, p, units(5, 15), config, t).links.r0;
      }
    });
  }
  for (auto& th : pool) th.join();
  const double ks = ks_distance(r0, [&](double x) { return cdf_r0(x, p); });
  MESSAGE("mode-B R0 KS = " << ks);
  CHECK(ks <= 0.02);
}

TEST_CASE("mode B: guard distances respect the typical cell") {
  const NetworkParams p;
  const auto g = units(5, 15);
  SimConfig config;
  config.fidelity = Fidelity::B;
  config.r_max = 8.0 / std::sqrt(kPi * p.lambda());
  const DrawNeeds needs = DrawNeeds::of({SinrMode::JointDts, SinrMode::CommAvg});
  int accepted = 0;
  for (long t = 0; t < 2000; ++t) {
    bool ok = false;
    const TrialDraw d = draw_trial_B(needs, p, g, config, t, 0, &ok);
    CHECK(d.links.r0 <= d.comm.guard + 1e-9);
    if (!ok) continue;
    ++accepted;
    CHECK(d.links.rho_r >= d.links.r3 - 1e-9);
    CHECK(d.links.r3 >= std::abs(g.r1() - g.r2()) - 1e-9);
    CHECK(d.links.r3 <= g.r1() + g.r2() + 1e-9);
  }
  CHECK(accepted > 1000);
  CHECK_FALSE(run_trial_B(SinrMode::CommAvg, p, g, config, 0).value() < 0.0);
}

TEST_CASE("mode B communication agrees with mode A") {
  const NetworkParams p;
  const auto g = units(5, 15);
  SimConfig config;
  config.trials = 10000;
  config.r_max = 12.0 / std::sqrt(kPi * p.lambda());
  std::vector<double> grid;
  for (double db = -20; db <= 20; db += 4) grid.push_back(db_to_linear(db));
  const auto a = run_campaign({SinrMode::CommNoDts}, p, g, config, grid);
  config.fidelity = Fidelity::B;
  const auto b = run_campaign({SinrMode::CommNoDts}, p, g, config, grid);
  CHECK(b[0].provenance == Provenance::SimulationB);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CAPTURE(linear_to_db(grid[i]));
    const double se = std::hypot((*a[0].std_error)[i], (*b[0].std_error)[i]);
    CHECK(std::abs(a[0].values[i] - b[0].values[i]) <= std::max(3.0 * se, 0.01));
  }
}

TEST_CASE("mode B rejection exhaustion is reported") {
  const NetworkParams p;
  SimConfig config;
  config.fidelity = Fidelity::B;
  config.max_attempts = 3;
  config.r_max = 6.0 / std::sqrt(kPi * p.lambda());
  const auto far = units(300, 300);
  CHECK_THROWS_AS(draw_trial_B_accepted(DrawNeeds::of({SinrMode::MonoDts}), p, far, config, 0),
                  RejectionExhausted);
  config.reject_outside_cell = false;
  CHECK_NOTHROW(draw_trial_B_accepted(DrawNeeds::of({SinrMode::MonoDts}), p, far, config, 0));
}

TEST_CASE("configuration validation") {
  SimConfig config;
  config.trials = 0;
  CHECK_THROWS_AS(validate(config), DomainError);
  config.trials = 1;
  config.r_max = -1.0;
  CHECK_THROWS_AS(validate(config), DomainError);
}
