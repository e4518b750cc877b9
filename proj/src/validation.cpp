#include "isac/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numbers>

#include "isac/ccdf.hpp"
#include "isac/csv.hpp"
#include "isac/fading.hpp"
#include "isac/geometry.hpp"
#include "isac/metrics.hpp"
#include "isac/montecarlo.hpp"
#include "isac/scenario.hpp"

namespace isac {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double x) { return format_double(x); }

CheckLine line(std::string id, double measured, double expected, double tolerance, bool pass,
               std::string note = {}) {
  return {std::move(id), num(measured), num(expected), num(tolerance),
          pass ? Verdict::Pass : Verdict::Fail, std::move(note)};
}

CheckLine info(std::string id, double measured, std::string note = {}) {
  return {std::move(id), num(measured), "", "", Verdict::Info, std::move(note)};
}

NetworkParams reference_params() { return NetworkParams{}; }

ScenarioGeometry units(double r1, double r2, double rr = 5.0) {
  return ScenarioGeometry::from_units(1e-5, r1, r2, rr);
}

std::vector<double> reference_grid() { return default_scenario().theta_linear(); }

std::vector<double> analytic_values(SinrMode mode, const std::vector<double>& grid,
                                    const NetworkParams& p, const ScenarioGeometry& g,
                                    const FadingFit& fit = FadingFit::standard()) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(ccdf(mode, t, p, g, {}, fit));
  return out;
}

const std::vector<SinrMode> kRadarDts = {SinrMode::BistaticDts, SinrMode::MonoDts,
                                         SinrMode::JointDts};

// Worst |sim - analytic| / max(3 stderr, 0.01) per mode.
std::vector<CheckLine> agreement_lines(const std::string& prefix, const SimConfig& config,
                                       bool primary) {
  const auto p = reference_params();
  const auto g = units(5.0, 15.0);
  const auto grid = reference_grid();
  const std::vector<SinrMode> modes(kAllModes.begin(), kAllModes.end());
  const auto sim = run_campaign(modes, p, g, config, grid);
  std::vector<CheckLine> out;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const auto ana = analytic_values(modes[k], grid, p, g, config.fit);
    double worst = 0.0, worst_diff = 0.0, worst_db = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double allowed = std::max(3.0 * (*sim[k].std_error)[i], 0.01);
      const double diff = std::abs(sim[k].values[i] - ana[i]);
      if (diff / allowed > worst) {
        worst = diff / allowed;
        worst_diff = diff;
        worst_db = linear_to_db(grid[i]);
      }
    }
    std::string note = "max |sim - analytic| = " + num(worst_diff) + " at " + num(worst_db) + " dB";
    const std::string id = prefix + "." + std::string(to_string(modes[k]));
    if (primary) {
      out.push_back(line(id, worst, 0.0, 1.0, worst <= 1.0, note));
    } else {
      out.push_back(info(id, worst, note));
    }
  }
  return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

CcdfCurve analytic_curve(SinrMode mode, const std::vector<double>& grid, const NetworkParams& p,
                         const ScenarioGeometry& g) {
  CcdfCurve c;
  c.mode = mode;
  c.theta = grid;
  c.values = analytic_values(mode, grid, p, g);
  return c;
}

}  // namespace

std::string criterion_of(const std::string& id) { return id.substr(0, id.find('.')); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "true";
    case Verdict::Fail: return "false";
    case Verdict::Info: return "info";
  }
  return "info";
}

std::vector<CheckLine> check_sim_agreement(const ValidationOptions& opt) {
  SimConfig config;
  config.trials = opt.trials;
  config.seed = opt.seed;
  config.threads = opt.threads;
  auto out = agreement_lines("sim_agreement", config, true);
  if (opt.diagnostics) {
    config.fading = FadingLaw::Fitted;
    for (auto& l : agreement_lines("diag.sim_fitted_fading", config, false)) out.push_back(l);
  }
  return out;
}

std::vector<CheckLine> check_closed_form() {
  const double expected = 1.3 / (1.3 + kPi / 4.0);
  const double measured = ccdf_comm_nodts(1.0, reference_params(), units(5.0, 15.0));
  return {line("closed_form", measured, expected, 1e-6, std::abs(measured - expected) <= 1e-6)};
}

std::vector<CheckLine> check_radar_only_equivalence() {
  NetworkSettings s;
  s.p_r = s.p_l;
  const NetworkParams p(s);
  const auto grid = reference_grid();
  double worst = 0.0;
  for (const auto& g : {units(5.0, 15.0), units(10.0, 5.0), units(2.0, 7.0)}) {
    const auto g_r = g.with_r_r(g.r1());
    worst = std::max(worst, max_abs_diff(analytic_values(SinrMode::RadarOnly, grid, p, g_r),
                                         analytic_values(SinrMode::MonoNoDts, grid, p, g_r)));
  }
  return {line("radar_only_equivalence", worst, 0.0, 1e-9, worst <= 1e-9)};
}

std::vector<CheckLine> check_ph_m_interchange() {
  NetworkSettings a;
  a.p_l = 1.0;
  a.sigma2 = 0.0;
  a.p_h = 5.0;
  a.m_slots = 10;
  NetworkSettings b = a;
  b.p_h = 10.0;
  b.m_slots = 5;
  const NetworkParams pa(a), pb(b);
  const auto grid = reference_grid();
  double worst = 0.0;
  for (const auto& g : {units(5.0, 15.0), units(15.0, 5.0), units(15.0, 10.0), units(5.0, 7.0)}) {
    for (SinrMode m : kRadarDts) {
      worst = std::max(worst, max_abs_diff(analytic_values(m, grid, pa, g),
                                           analytic_values(m, grid, pb, g)));
    }
  }
  return {line("ph_m_interchange", worst, 0.0, 1e-12, worst <= 1e-12)};
}

std::vector<CheckLine> check_symmetry() {
  const auto p = reference_params();
  const auto grid = reference_grid();
  const std::vector<std::pair<double, double>> pairs = {{5.0, 15.0}, {3.0, 12.0}, {5.0, 7.0}};
  const double v = ScenarioGeometry::default_unit(p.lambda());
  std::vector<CheckLine> out;

  double swap = 0.0;
  for (const auto& [r1, r2] : pairs) {
    for (SinrMode m : {SinrMode::BistaticDts, SinrMode::BistaticNoDts}) {
      swap = std::max(swap, max_abs_diff(analytic_values(m, grid, p, units(r1, r2)),
                                         analytic_values(m, grid, p, units(r2, r1))));
    }
    const double a = r1 * v, b = r2 * v;
    for (int i = 0; i <= 200; ++i) {
      const double r = std::abs(a - b) + 2.0 * std::min(a, b) * i / 200.0;
      swap = std::max(swap, std::abs(cdf_r3(r, a, b) - cdf_r3(r, b, a)));
    }
  }
  out.push_back(line("symmetry.r1_r2_swap", swap, 0.0, 0.0, swap == 0.0));

  double joint_gap = 0.0, dts_gap = 0.0, rise = 0.0;
  for (const auto& [r1, r2] : pairs) {
    const auto g = units(r1, r2);
    std::map<SinrMode, std::vector<double>> curves;
    for (SinrMode m : kAllModes) curves[m] = analytic_values(m, grid, p, g);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      joint_gap = std::max(joint_gap, std::max(curves[SinrMode::BistaticDts][i], curves[SinrMode::MonoDts][i]) -
                                          curves[SinrMode::JointDts][i]);
      joint_gap = std::max(joint_gap,
                           std::max(curves[SinrMode::BistaticNoDts][i], curves[SinrMode::MonoNoDts][i]) -
                               curves[SinrMode::JointNoDts][i]);
      dts_gap = std::max(dts_gap, curves[SinrMode::BistaticNoDts][i] - curves[SinrMode::BistaticDts][i]);
      dts_gap = std::max(dts_gap, curves[SinrMode::MonoNoDts][i] - curves[SinrMode::MonoDts][i]);
      dts_gap = std::max(dts_gap, curves[SinrMode::JointNoDts][i] - curves[SinrMode::JointDts][i]);
    }
    for (const auto& [m, vals] : curves) {
      for (std::size_t i = 1; i < vals.size(); ++i) rise = std::max(rise, vals[i] - vals[i - 1]);
    }
  }

  // The same ordering on shared simulated draws.
  SimConfig config;
  config.trials = 2000;
  const std::vector<SinrMode> modes = {SinrMode::BistaticDts, SinrMode::MonoDts, SinrMode::JointDts};
  const auto sim = run_campaign(modes, p, units(5.0, 15.0), config, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    joint_gap = std::max(joint_gap, std::max(sim[0].values[i], sim[1].values[i]) - sim[2].values[i]);
  }

  out.push_back(line("symmetry.joint_ge_max", joint_gap, 0.0, 0.0, joint_gap <= 0.0));
  out.push_back(line("symmetry.dts_ge_nodts", dts_gap, 0.0, 0.0, dts_gap <= 0.0));
  out.push_back(line("symmetry.nonincreasing", rise, 0.0, 0.0, rise <= 0.0));
  return out;
}

std::vector<CheckLine> check_fading_fit(const ValidationOptions& opt) {
  const auto standard = FadingFit::standard(EpsMonoReading::MeanMatched);
  const auto literal = FadingFit::standard(EpsMonoReading::Literal);
  std::vector<double> hj, hjr;
  hj.reserve(opt.fit_draws);
  hjr.reserve(opt.fit_draws);
  Rng rng_j = make_stream(opt.seed, 0, Stream::Bistatic);
  Rng rng_r = make_stream(opt.seed, 0, Stream::Mono);
  for (long i = 0; i < opt.fit_draws; ++i) {
    hj.push_back(sample_hj(rng_j));
    hjr.push_back(sample_hjr(rng_r));
  }
  const double ks_j = ks_distance(hj, [&](double x) { return cdf_hj(x, standard); });
  const double ks_r = ks_distance(hjr, [&](double x) { return cdf_hjr(x, standard); });
  std::vector<CheckLine> out = {line("fading_fit_ks.h_j", ks_j, 0.0, 0.05, ks_j <= 0.05),
                                line("fading_fit_ks.h_jr", ks_r, 0.0, 0.05, ks_r <= 0.05)};
  if (opt.diagnostics) {
    const double ks_lit = ks_distance(hjr, [&](double x) { return cdf_hjr(x, literal); });
    out.push_back(info("diag.fading_fit_ks.h_jr_literal", ks_lit,
                       "eps_mono = harmonic(m_bi)/2 = " + num(literal.eps_mono)));
  }
  return out;
}

std::vector<CheckLine> check_headline_db(const ValidationOptions& opt) {
  const auto p = reference_params();
  const auto g = units(5.0, 15.0);
  std::vector<double> grid;
  for (double db : make_grid(-70.0, 30.0, 0.25)) grid.push_back(db_to_linear(db));
  const auto jd = analytic_curve(SinrMode::JointDts, grid, p, g);
  const auto jn = analytic_curve(SinrMode::JointNoDts, grid, p, g);
  const auto cd = analytic_curve(SinrMode::CommAvg, grid, p, g);
  const auto cn = analytic_curve(SinrMode::CommNoDts, grid, p, g);

  const double radar = horizontal_shift_db(jd, jn, 0.5);
  const double comm = horizontal_shift_db(cd, cn, 0.5);
  std::vector<CheckLine> out = {
      line("headline_db.radar_joint", radar, 5.5, 1.0, std::abs(radar - 5.5) <= 1.0),
      line("headline_db.comm_avg", std::abs(comm), 0.0, 1.5, std::abs(comm) < 1.5,
           "signed shift " + num(comm) + " dB")};
  if (opt.diagnostics) {
    for (double level : {0.25, 0.75}) {
      out.push_back(info("diag.headline_db.radar_joint@" + num(level), horizontal_shift_db(jd, jn, level)));
      out.push_back(info("diag.headline_db.comm_avg@" + num(level), horizontal_shift_db(cd, cn, level)));
    }
  }
  return out;
}

std::vector<CheckLine> check_gain_percentages() {
  const double theta = db_to_linear(-40.0);
  const double k = 50.5;  // metres
  NetworkSettings s;
  s.p_h = 5.0;
  s.m_slots = 10;
  const NetworkParams p(s);
  const double v = ScenarioGeometry::default_unit(p.lambda());

  struct Minima {
    double bi = 1.0, mono = 1.0, joint = 1.0;
  };
  Minima dts, nodts;
  for (double r1 : make_grid(0.5, 50.0, 0.5)) {
    const ScenarioGeometry g(r1, k - r1, r1, v);
    const double bd = ccdf_bistatic_dts(theta, p, g), md = ccdf_mono_dts(theta, p, g);
    const double bn = ccdf_bistatic_nodts(theta, p, g), mn = ccdf_mono_nodts(theta, p, g);
    dts = {std::min(dts.bi, bd), std::min(dts.mono, md), std::min(dts.joint, ccdf_joint(bd, md))};
    nodts = {std::min(nodts.bi, bn), std::min(nodts.mono, mn),
             std::min(nodts.joint, ccdf_joint(bn, mn))};
  }

  std::vector<CheckLine> out;
  const auto add = [&](const std::string& id, double a, double b, double expected) {
    const double gain = relative_gain_pct(a, b);
    const double tol = 0.1 * expected;
    out.push_back(line("gain_percentages." + id, gain, expected, tol,
                       std::abs(gain - expected) <= tol));
  };
  add("bi_vs_mono_dts", dts.bi, dts.mono, 279.3);
  add("joint_vs_bi_dts", dts.joint, dts.bi, 11.4);
  add("joint_vs_mono_dts", dts.joint, dts.mono, 322.4);
  add("bi_vs_mono_nodts", nodts.bi, nodts.mono, 726.2);
  add("joint_vs_bi_nodts", nodts.joint, nodts.bi, 18.1);
  add("joint_vs_mono_nodts", nodts.joint, nodts.mono, 876.2);
  return out;
}

std::vector<CheckLine> check_throughput_minimum() {
  const double theta = db_to_linear(10.0);
  std::vector<double> ms, tp;
  for (int m = 2; m <= 40; ++m) {
    NetworkSettings s;
    s.p_h = 5.0;
    s.m_slots = m;
    const NetworkParams p(s);
    ms.push_back(m);
    tp.push_back(throughput(theta, ccdf_comm_avg(theta, p, units(5.0, 7.0))));
  }
  const auto idx = find_interior_extremum(ms, tp);
  const bool is_min = idx && tp[*idx] < tp[*idx - 1] && tp[*idx] < tp[*idx + 1];
  CheckLine l;
  l.id = "throughput_minimum";
  l.measured = is_min ? "M=" + num(ms[*idx]) : "none";
  l.expected = "interior minimum";
  l.tolerance = "strict";
  l.verdict = is_min ? Verdict::Pass : Verdict::Fail;
  l.note = "theta = 10 dB";
  return {l};
}

std::vector<CheckLine> check_determinism(const ValidationOptions& opt) {
  const auto p = reference_params();
  const auto g = units(5.0, 15.0);
  const std::vector<SinrMode> modes(kAllModes.begin(), kAllModes.end());
  std::size_t mismatches = 0;
  for (Fidelity f : {Fidelity::A, Fidelity::B}) {
    SimConfig config;
    config.seed = opt.seed;
    config.fidelity = f;
    config.trials = f == Fidelity::A ? opt.determinism_trials : opt.determinism_trials / 10;
    if (f == Fidelity::B) config.r_max = 8.0 / std::sqrt(kPi * p.lambda());
    config.threads = 1;
    const auto ref = simulate(modes, p, g, config);
    for (unsigned t : {2u, 8u}) {
      config.threads = t;
      const auto other = simulate(modes, p, g, config);
      for (std::size_t k = 0; k < ref.size(); ++k) {
        for (std::size_t i = 0; i < ref[k].size(); ++i) {
          if (std::memcmp(&ref[k][i], &other[k][i], sizeof(double)) != 0) ++mismatches;
        }
      }
    }
  }
  const double m = static_cast<double>(mismatches);
  return {line("determinism", m, 0.0, 0.0, mismatches == 0, "threads 1 vs 2 vs 8, fidelity A and B")};
}

std::vector<CheckLine> run_validation(const ValidationOptions& opt) {
  std::vector<CheckLine> out;
  const auto append = [&out](std::vector<CheckLine> lines) {
    for (auto& l : lines) out.push_back(std::move(l));
  };
  append(check_sim_agreement(opt));
  append(check_closed_form());
  append(check_radar_only_equivalence());
  append(check_ph_m_interchange());
  append(check_symmetry());
  append(check_fading_fit(opt));
  append(check_headline_db(opt));
  append(check_gain_percentages());
  append(check_throughput_minimum());
  append(check_determinism(opt));

  if (opt.diagnostics) {
    // Gap between the averaged-power model and per-slot random powers.
    const auto p = reference_params();
    const auto g = units(5.0, 15.0);
    const auto grid = reference_grid();
    SimConfig config;
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.threads = opt.threads;
    const auto averaged = run_campaign(kRadarDts, p, g, config, grid);
    config.interferer_power = InterfererPower::Aloha;
    const auto aloha = run_campaign(kRadarDts, p, g, config, grid);
    for (std::size_t k = 0; k < kRadarDts.size(); ++k) {
      out.push_back(info("diag.aloha_vs_averaged." + std::string(to_string(kRadarDts[k])),
                         max_abs_diff(averaged[k].values, aloha[k].values),
                         "max |ccdf_aloha - ccdf_averaged| over the grid"));
    }
  }
  return out;
}

std::vector<std::pair<std::string, bool>> summarize(const std::vector<CheckLine>& lines) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& l : lines) {
    if (l.verdict == Verdict::Info) continue;
    const std::string c = criterion_of(l.id);
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == c; });
    if (it == out.end()) {
      out.emplace_back(c, true);
      it = out.end() - 1;
    }
    if (l.verdict == Verdict::Fail) it->second = false;
  }
  return out;
}

}  // namespace isac
