#include "isac/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "isac/errors.hpp"
#include "isac/voronoi.hpp"

namespace isac {

namespace {

constexpr double kPi = std::numbers::pi;

int uniform_slot(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi - 1)(rng);
}

void add_interferers(ReceiverField& field, const InterfererField& src, int m_slots, Rng& rng) {
  field.guard = src.guard;
  field.interferers.clear();
  field.interferers.reserve(src.distances.size());
  for (double d : src.distances) {
    Interferer i;
    i.distance = d;
    i.fading = sample_exp(rng);
    i.high_slot = uniform_slot(0, m_slots, rng);
    field.interferers.push_back(i);
  }
}

// The nominal window may be smaller than a far guard zone.
double outer_radius(double psi, double r_max) { return std::max(r_max, 2.0 * psi); }

struct Site {
  Point p;
  int slot;
};

// BS at the origin (high slot 0) plus a PPP on the disk of radius r_max.
std::vector<Site> realize_network(const NetworkParams& params, double r_max, Rng& rng) {
  std::poisson_distribution<long> count(params.lambda() * kPi * r_max * r_max);
  const long n = count(rng);
  std::vector<Site> sites;
  sites.reserve(static_cast<std::size_t>(n) + 1);
  sites.push_back({{0.0, 0.0}, 0});
  for (long i = 0; i < n; ++i) {
    const double r = r_max * std::sqrt(uniform_open(rng));
    const double a = 2.0 * kPi * uniform_open(rng);
    sites.push_back({{r * std::cos(a), r * std::sin(a)}, uniform_slot(0, params.m_slots(), rng)});
  }
  return sites;
}

std::vector<Point> positions(const std::vector<Site>& sites) {
  std::vector<Point> out;
  out.reserve(sites.size());
  for (const Site& s : sites) out.push_back(s.p);
  return out;
}

// Interference seen at `at` from every BS except the origin one.
ReceiverField measured_field(Point at, const std::vector<Site>& sites, Rng& rng) {
  ReceiverField field;
  field.guard = std::numeric_limits<double>::infinity();
  field.interferers.reserve(sites.size());
  for (std::size_t k = 1; k < sites.size(); ++k) {
    Interferer i;
    i.distance = distance(at, sites[k].p);
    i.fading = sample_exp(rng);
    i.high_slot = sites[k].slot;
    field.guard = std::min(field.guard, i.distance);
    field.interferers.push_back(i);
  }
  return field;
}

Point polar(Point from, double r, double angle) {
  return {from.x + r * std::cos(angle), from.y + r * std::sin(angle)};
}

void draw_hj_hjr(TrialDraw& d, const NetworkParams&, const SimConfig& config, Rng& link,
                 Rng& bistatic, Rng& mono, const DrawNeeds& needs) {
  if (config.fading == FadingLaw::Exact) {
    d.h1 = sample_exp(link);
    if (needs.bistatic) {
      d.h2 = sample_exp(bistatic);
      d.hj = d.h1 * d.h2;
    }
    if (needs.mono) d.hjr = d.h1 * d.h1;
  } else {
    if (needs.bistatic) d.hj = sample_hj_fitted(config.fit, bistatic);
    if (needs.mono) d.hjr = sample_hjr_fitted(config.fit, mono);
  }
}

double sample_h_r(const SimConfig& config, Rng& rng) {
  return config.fading == FadingLaw::Exact ? sample_hjr(rng) : sample_hjr_fitted(config.fit, rng);
}

void draw_comm_slots(TrialDraw& d, const NetworkParams& params, Rng& rng) {
  d.avg_slot = uniform_slot(0, params.m_slots(), rng);
  d.low_slot = uniform_slot(1, params.m_slots(), rng);
}

void fill_comm_B(TrialDraw& d, const NetworkParams& params, const SimConfig& config,
                 double r_max, long trial, int attempt) {
  Rng net = make_stream(config.seed, trial, Stream::Network, attempt);
  const auto sites = realize_network(params, r_max, net);
  const auto pts = positions(sites);
  Rng rng = make_stream(config.seed, trial, Stream::Comm, attempt);
  const Polygon cell = voronoi_cell(pts[0], pts, r_max);
  const Point ue = sample_in_polygon(cell, rng);
  d.links.r0 = std::hypot(ue.x, ue.y);
  d.h0 = sample_exp(rng);
  draw_comm_slots(d, params, rng);
  d.comm = measured_field(ue, sites, rng);
}

bool fill_isac_B(TrialDraw& d, const DrawNeeds& needs, const NetworkParams& params,
                 const ScenarioGeometry& geom, const SimConfig& config, double r_max,
                 long trial, int attempt) {
  Rng net = make_stream(config.seed, trial, Stream::Network, attempt);
  const auto sites = realize_network(params, r_max, net);
  const auto pts = positions(sites);
  Rng place = make_stream(config.seed, trial, Stream::Placement, attempt);
  const double a = 2.0 * kPi * uniform_open(place);
  const double b = 2.0 * kPi * uniform_open(place);
  const Point tar = polar(pts[0], geom.r1(), a);
  const Point rad = polar(tar, geom.r2(), b);
  if (config.reject_outside_cell &&
      (!in_cell(tar, pts[0], pts) || !in_cell(rad, pts[0], pts))) {
    return false;
  }
  d.links.r3 = std::hypot(rad.x, rad.y);
  d.links.phi = std::remainder(b - a - kPi, 2.0 * kPi);
  if (d.links.phi < 0.0) d.links.phi += 2.0 * kPi;

  Rng link = make_stream(config.seed, trial, Stream::Link, attempt);
  Rng bi = make_stream(config.seed, trial, Stream::Bistatic, attempt);
  Rng mono = make_stream(config.seed, trial, Stream::Mono, attempt);
  draw_hj_hjr(d, params, config, link, bi, mono, needs);
  if (needs.bistatic) {
    d.bistatic = measured_field(rad, sites, bi);
    d.links.rho_r = d.bistatic.guard;
  }
  if (needs.mono) {
    d.mono = measured_field(pts[0], sites, mono);
    d.links.rho = d.mono.guard;
  }
  return true;
}

bool fill_radar_only_B(TrialDraw& d, const NetworkParams& params, const ScenarioGeometry& geom,
                       const SimConfig& config, double r_max, long trial, int attempt) {
  Rng net = make_stream(config.seed, trial, Stream::RadarNetwork, attempt);
  const auto sites = realize_network(params, r_max, net);
  const auto pts = positions(sites);
  Rng rng = make_stream(config.seed, trial, Stream::RadarOnly, attempt);
  const Point tar = polar(pts[0], geom.r_r(), 2.0 * kPi * uniform_open(rng));
  if (config.reject_outside_cell && !in_cell(tar, pts[0], pts)) return false;
  d.h_r = sample_h_r(config, rng);
  d.radar_only = measured_field(pts[0], sites, rng);
  d.links.rho_rad = d.radar_only.guard;
  return true;
}

enum class PowerModel { Dts, Fixed };

double interference(const ReceiverField& field, const NetworkParams& params,
                    const SimConfig& config, PowerModel model, double fixed_power, int slot) {
  const double avg = p_avg(params);
  const double eta = params.eta();
  double total = 0.0;
  for (const Interferer& i : field.interferers) {
    double power = fixed_power;
    if (model == PowerModel::Dts) {
      if (config.interferer_power == InterfererPower::Averaged) {
        power = avg;
      } else {
        power = i.high_slot == slot ? params.p_h() : params.p_l();
      }
    }
    total += power * i.fading * std::pow(i.distance, -eta);
  }
  return total;
}

double ratio(double signal, double noise_plus_interference) {
  return signal / noise_plus_interference;
}

}  // namespace

void validate(const SimConfig& config) {
  if (config.trials < 1) throw DomainError("trials must be >= 1");
  if (config.r_max && !(*config.r_max > 0.0)) throw DomainError("r_max must be > 0");
  if (config.max_attempts < 1) throw DomainError("max_attempts must be >= 1");
}

double window_radius(const SimConfig& config, const NetworkParams& params) {
  return config.r_max ? *config.r_max : default_window_radius(params);
}

unsigned worker_count(const SimConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv("ISAC_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

DrawNeeds DrawNeeds::of(const std::vector<SinrMode>& modes) {
  DrawNeeds n;
  for (SinrMode m : modes) {
    switch (m) {
      case SinrMode::CommHigh:
      case SinrMode::CommLow:
      case SinrMode::CommAvg:
      case SinrMode::CommNoDts: n.comm = true; break;
      case SinrMode::BistaticDts:
      case SinrMode::BistaticNoDts: n.bistatic = true; break;
      case SinrMode::MonoDts:
      case SinrMode::MonoNoDts: n.mono = true; break;
      case SinrMode::JointDts:
      case SinrMode::JointNoDts: n.bistatic = n.mono = true; break;
      case SinrMode::RadarOnly: n.radar_only = true; break;
    }
  }
  return n;
}

TrialDraw draw_trial_A(const DrawNeeds& needs, const NetworkParams& params,
                       const ScenarioGeometry& geom, const SimConfig& config, long trial) {
  const double r_max = window_radius(config, params);
  const int m = params.m_slots();
  TrialDraw d;

  if (needs.comm) {
    Rng rng = make_stream(config.seed, trial, Stream::Comm);
    d.links.r0 = sample_r0(params, rng);
    d.h0 = sample_exp(rng);
    draw_comm_slots(d, params, rng);
    const auto field =
        sample_interferer_field(d.links.r0, params, outer_radius(d.links.r0, r_max), rng, false);
    add_interferers(d.comm, field, m, rng);
  }

  if (needs.isac_radar()) {
    Rng link = make_stream(config.seed, trial, Stream::Link);
    Rng bi = make_stream(config.seed, trial, Stream::Bistatic);
    Rng mono = make_stream(config.seed, trial, Stream::Mono);
    draw_hj_hjr(d, params, config, link, bi, mono, needs);
    if (needs.bistatic) {
      if (config.r3_law == R3Law::Exact) {
        d.links.r3 = sample_r3_exact(geom.r1(), geom.r2(), bi, &d.links.phi);
      } else {
        d.links.r3 = sample_r3(geom.r1(), geom.r2(), bi);
      }
      d.links.rho_r = sample_rho_r(d.links.r3, params, bi);
      const auto field = sample_interferer_field(d.links.rho_r, params,
                                                 outer_radius(d.links.rho_r, r_max), bi);
      add_interferers(d.bistatic, field, m, bi);
    }
    if (needs.mono) {
      d.links.rho = sample_rho(params, mono);
      const auto field =
          sample_interferer_field(d.links.rho, params, outer_radius(d.links.rho, r_max), mono);
      add_interferers(d.mono, field, m, mono);
    }
  }

  if (needs.radar_only) {
    Rng rng = make_stream(config.seed, trial, Stream::RadarOnly);
    d.h_r = sample_h_r(config, rng);
    d.links.rho_rad = sample_rho(params, rng);
    const auto field = sample_interferer_field(d.links.rho_rad, params,
                                               outer_radius(d.links.rho_rad, r_max), rng);
    add_interferers(d.radar_only, field, m, rng);
  }
  return d;
}

TrialDraw draw_trial_B(const DrawNeeds& needs, const NetworkParams& params,
                       const ScenarioGeometry& geom, const SimConfig& config, long trial,
                       int attempt, bool* accepted) {
  const double r_max = window_radius(config, params);
  TrialDraw d;
  bool ok = true;
  if (needs.comm) fill_comm_B(d, params, config, r_max, trial, attempt);
  if (needs.isac_radar()) ok = fill_isac_B(d, needs, params, geom, config, r_max, trial, attempt) && ok;
  if (needs.radar_only) ok = fill_radar_only_B(d, params, geom, config, r_max, trial, attempt) && ok;
  if (accepted) *accepted = ok;
  return d;
}

TrialDraw draw_trial_B_accepted(const DrawNeeds& needs, const NetworkParams& params,
                                const ScenarioGeometry& geom, const SimConfig& config,
                                long trial) {
  const double r_max = window_radius(config, params);
  TrialDraw d;
  if (needs.comm) fill_comm_B(d, params, config, r_max, trial, 0);
  if (needs.isac_radar()) {
    int attempt = 0;
    while (!fill_isac_B(d, needs, params, geom, config, r_max, trial, attempt)) {
      if (++attempt >= config.max_attempts) {
        throw RejectionExhausted("mode B: target or radar outside the typical cell in " +
                                 std::to_string(config.max_attempts) + " attempts (trial " +
                                 std::to_string(trial) + ")");
      }
    }
  }
  if (needs.radar_only) {
    int attempt = 0;
    while (!fill_radar_only_B(d, params, geom, config, r_max, trial, attempt)) {
      if (++attempt >= config.max_attempts) {
        throw RejectionExhausted("mode B: radar-only target outside the typical cell in " +
                                 std::to_string(config.max_attempts) + " attempts (trial " +
                                 std::to_string(trial) + ")");
      }
    }
  }
  return d;
}

double sinr(SinrMode mode, const TrialDraw& d, const NetworkParams& params,
            const ScenarioGeometry& geom, const SimConfig& config) {
  const double eta = params.eta();
  const double noise = params.sigma2();
  const double r0_loss = std::pow(d.links.r0, -eta);
  const double bi_loss = std::pow(geom.r1(), -eta) * std::pow(geom.r2(), -eta);
  const double mono_loss = std::pow(geom.r1(), -2.0 * eta);

  const auto comm = [&](double signal_power, int slot, PowerModel model) {
    return ratio(signal_power * d.h0 * r0_loss,
                 interference(d.comm, params, config, model, params.p_l(), slot) + noise);
  };
  const auto bistatic = [&](double p, PowerModel model) {
    return ratio(p * d.hj * bi_loss,
                 interference(d.bistatic, params, config, model, params.p_l(), 0) + noise);
  };
  const auto mono = [&](double p, PowerModel model) {
    return ratio(p * d.hjr * mono_loss,
                 interference(d.mono, params, config, model, params.p_l(), 0) + noise);
  };

  switch (mode) {
    case SinrMode::CommHigh: return comm(params.p_h(), 0, PowerModel::Dts);
    case SinrMode::CommLow: return comm(params.p_l(), d.low_slot, PowerModel::Dts);
    case SinrMode::CommAvg:
      return comm(d.avg_slot == 0 ? params.p_h() : params.p_l(), d.avg_slot, PowerModel::Dts);
    case SinrMode::CommNoDts: return comm(params.p_l(), 0, PowerModel::Fixed);
    case SinrMode::BistaticDts: return bistatic(params.p_h(), PowerModel::Dts);
    case SinrMode::BistaticNoDts: return bistatic(params.p_l(), PowerModel::Fixed);
    case SinrMode::MonoDts: return mono(params.p_h(), PowerModel::Dts);
    case SinrMode::MonoNoDts: return mono(params.p_l(), PowerModel::Fixed);
    case SinrMode::JointDts:
      return std::max(bistatic(params.p_h(), PowerModel::Dts), mono(params.p_h(), PowerModel::Dts));
    case SinrMode::JointNoDts:
      return std::max(bistatic(params.p_l(), PowerModel::Fixed),
                      mono(params.p_l(), PowerModel::Fixed));
    case SinrMode::RadarOnly:
      return ratio(params.p_r() * d.h_r * std::pow(geom.r_r(), -2.0 * eta),
                   interference(d.radar_only, params, config, PowerModel::Fixed, params.p_r(), 0) +
                       noise);
  }
  throw DomainError("sinr: unknown mode");
}

double run_trial_A(SinrMode mode, const NetworkParams& params, const ScenarioGeometry& geom,
                   const SimConfig& config, long trial) {
  const TrialDraw d = draw_trial_A(DrawNeeds::of({mode}), params, geom, config, trial);
  return sinr(mode, d, params, geom, config);
}

std::optional<double> run_trial_B(SinrMode mode, const NetworkParams& params,
                                  const ScenarioGeometry& geom, const SimConfig& config,
                                  long trial, int attempt) {
  bool accepted = false;
  const TrialDraw d = draw_trial_B(DrawNeeds::of({mode}), params, geom, config, trial, attempt,
                                   &accepted);
  if (!accepted) return std::nullopt;
  return sinr(mode, d, params, geom, config);
}

CcdfCurve estimate_ccdf(std::vector<double> samples, const std::vector<double>& theta_grid,
                        SinrMode mode, Provenance provenance) {
  if (samples.empty()) throw DomainError("estimate_ccdf: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  CcdfCurve curve;
  curve.mode = mode;
  curve.provenance = provenance;
  curve.theta = theta_grid;
  std::vector<double> se;
  for (double theta : theta_grid) {
    const auto above = samples.end() - std::upper_bound(samples.begin(), samples.end(), theta);
    const double p = static_cast<double>(above) / n;
    curve.values.push_back(p);
    se.push_back(std::sqrt(p * (1.0 - p) / n));
  }
  curve.std_error = std::move(se);
  return curve;
}

std::vector<std::vector<double>> simulate(const std::vector<SinrMode>& modes,
                                          const NetworkParams& params,
                                          const ScenarioGeometry& geom,
                                          const SimConfig& config) {
  validate(config);
  const DrawNeeds needs = DrawNeeds::of(modes);
  const long n = config.trials;
  std::vector<std::vector<double>> out(modes.size(), std::vector<double>(n));

  const auto run_one = [&](long t) {
    const TrialDraw d = config.fidelity == Fidelity::A
                            ? draw_trial_A(needs, params, geom, config, t)
                            : draw_trial_B_accepted(needs, params, geom, config, t);
    for (std::size_t k = 0; k < modes.size(); ++k) {
      out[k][t] = sinr(modes[k], d, params, geom, config);
    }
  };

  constexpr long kChunk = 64;
  const long chunks = (n + kChunk - 1) / kChunk;
  const unsigned workers =
      static_cast<unsigned>(std::min<long>(worker_count(config), chunks));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  const auto work = [&] {
    for (;;) {
      const long c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        for (long t = c * kChunk; t < std::min(n, (c + 1) * kChunk); ++t) run_one(t);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        if (!failure) failure = std::current_exception();
        next = chunks;
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<CcdfCurve> run_campaign(const std::vector<SinrMode>& modes,
                                    const NetworkParams& params, const ScenarioGeometry& geom,
                                    const SimConfig& config,
                                    const std::vector<double>& theta_grid) {
  auto samples = simulate(modes, params, geom, config);
  const Provenance prov =
      config.fidelity == Fidelity::A ? Provenance::SimulationA : Provenance::SimulationB;
  std::vector<CcdfCurve> curves;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    curves.push_back(estimate_ccdf(std::move(samples[k]), theta_grid, modes[k], prov));
  }
  return curves;
}

}  // namespace isac
