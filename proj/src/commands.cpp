#include "isac/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <tuple>

#include "isac/ccdf.hpp"
#include "isac/csv.hpp"
#include "isac/errors.hpp"
#include "isac/fading.hpp"
#include "isac/metrics.hpp"
#include "isac/montecarlo.hpp"
#include "isac/scenario.hpp"

namespace isac {

namespace fs = std::filesystem;

namespace {

template <typename Body>
int guarded(std::ostream& log, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalFailure& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const RejectionExhausted& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

// Curves of one scenario, analytic first, then simulation.
std::vector<CcdfCurve> curves_for(const Scenario& sc, Engine engine) {
  const auto grid = sc.theta_linear();
  std::vector<CcdfCurve> out;
  if (engine != Engine::Sim) {
    for (SinrMode m : sc.modes) {
      out.push_back(evaluate(CcdfRequest{m, grid, sc.params, sc.geometry, {}, sc.sim.fit}));
    }
  }
  if (engine != Engine::Analytic) {
    for (auto& c : run_campaign(sc.modes, sc.params, sc.geometry, sc.sim, grid)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<std::string> curve_cells(const CcdfCurve& c, std::size_t i, double theta_db) {
  return {format_double(theta_db), std::string(to_string(c.mode)),
          std::string(to_string(c.provenance)), format_double(c.values[i]),
          c.std_error ? format_double((*c.std_error)[i]) : std::string()};
}

std::size_t mode_rank(SinrMode m) {
  return static_cast<std::size_t>(std::find(kAllModes.begin(), kAllModes.end(), m) - kAllModes.begin());
}

Scenario apply_sweep(const Scenario& base, const SweepSpec& spec, double value) {
  Scenario sc = base;
  const double unit = spec.meters ? 1.0 : base.geometry.v();
  const auto& g = base.geometry;
  NetworkSettings s = base.params.settings();
  if (spec.variable == "r1") {
    sc.geometry = g.with_r1(value * unit);
  } else if (spec.variable == "r2") {
    sc.geometry = g.with_r2(value * unit);
  } else if (spec.variable == "k_total") {
    sc.geometry = g.with_r1(value * unit).with_r2((*spec.k - value) * unit);
  } else if (spec.variable == "p_h") {
    s.p_h = value;
    sc.params = NetworkParams(s);
  } else if (spec.variable == "m_slots") {
    s.m_slots = static_cast<int>(value);
    sc.params = NetworkParams(s);
  }
  return sc;
}

void check_sweep(const SweepSpec& spec) {
  static const std::vector<std::string> vars = {"r1", "r2", "p_h", "m_slots", "k_total"};
  if (std::find(vars.begin(), vars.end(), spec.variable) == vars.end()) {
    throw DomainError("unknown sweep variable '" + spec.variable +
                      "' (expected r1, r2, p_h, m_slots or k_total)");
  }
  if (spec.values.empty()) throw DomainError("sweep values list is empty");
  if (spec.variable == "k_total" && !spec.k) throw DomainError("k_total sweep needs --k");
  if (spec.variable != "k_total" && spec.k) throw DomainError("--k only applies to k_total");
  if (spec.variable == "m_slots") {
    for (double v : spec.values) {
      if (v != std::floor(v)) throw DomainError("m_slots values must be integers");
    }
  }
}

}  // namespace

int cmd_ccdf(const fs::path& scenario, const fs::path& output, Engine engine, std::ostream& log) {
  return guarded(log, [&] {
    const Scenario sc = load_scenario(scenario);
    const auto curves = curves_for(sc, engine);

    std::vector<const CcdfCurve*> order;
    for (const auto& c : curves) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(), [](const CcdfCurve* a, const CcdfCurve* b) {
      return mode_rank(a->mode) < mode_rank(b->mode);
    });

    CsvTable table({"theta_db", "mode", "engine", "value", "stderr"});
    for (std::size_t k = 0; k < order.size();) {
      const SinrMode m = order[k]->mode;
      std::size_t end = k;
      while (end < order.size() && order[end]->mode == m) ++end;
      for (std::size_t i = 0; i < sc.theta_db.size(); ++i) {
        for (std::size_t j = k; j < end; ++j) table.add_row(curve_cells(*order[j], i, sc.theta_db[i]));
      }
      k = end;
    }
    write_atomic(output, table.str());
    log << "wrote " << table.rows() << " rows to " << output.string() << '\n';
    return kExitOk;
  });
}

int cmd_sweep(const fs::path& scenario, const SweepSpec& spec, const fs::path& output,
              Engine engine, std::ostream& log) {
  return guarded(log, [&] {
    check_sweep(spec);
    const Scenario base = load_scenario(scenario);

    struct Row {
      std::size_t mode, theta, value, curve;
      std::vector<std::string> cells;
    };
    std::vector<Row> rows;
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
      const double value = spec.values[vi];
      const Scenario sc = apply_sweep(base, spec, value);
      const auto curves = curves_for(sc, engine);
      for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const auto& c = curves[ci];
        for (std::size_t i = 0; i < sc.theta_db.size(); ++i) {
          std::vector<std::string> cells = {spec.variable, format_double(value)};
          for (auto& cell : curve_cells(c, i, sc.theta_db[i])) cells.push_back(std::move(cell));
          if (spec.throughput) cells.push_back(format_double(throughput(c.theta[i], c.values[i])));
          rows.push_back({mode_rank(c.mode), i, vi, ci, std::move(cells)});
        }
      }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return std::tie(a.mode, a.theta, a.value, a.curve) < std::tie(b.mode, b.theta, b.value, b.curve);
    });

    std::vector<std::string> header = {"sweep_var", "sweep_value", "theta_db", "mode",
                                       "engine",    "value",       "stderr"};
    if (spec.throughput) header.push_back("throughput");
    CsvTable table(header);
    for (auto& r : rows) table.add_row(std::move(r.cells));
    write_atomic(output, table.str());
    log << "wrote " << table.rows() << " rows to " << output.string() << '\n';
    return kExitOk;
  });
}

int cmd_validate(const fs::path& output_dir, const ValidationOptions& options, std::ostream& log) {
  return guarded(log, [&] {
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    const fs::path report = output_dir / "validation_report.csv";
    {
      // Fail before the long run if the directory is not writable.
      const fs::path probe = output_dir / ".validation_probe";
      std::ofstream out(probe);
      if (!out) throw IoError("output directory " + output_dir.string() + " is not writable");
      out.close();
      fs::remove(probe, ec);
    }

    const auto lines = run_validation(options);
    CsvTable table({"id", "measured", "expected", "tolerance", "pass"});
    for (const auto& l : lines) {
      table.add_row({l.id, l.measured, l.expected, l.tolerance, to_string(l.verdict)});
      log << (l.verdict == Verdict::Pass ? "PASS " : l.verdict == Verdict::Fail ? "FAIL " : "INFO ")
          << l.id << " measured=" << l.measured;
      if (!l.expected.empty()) log << " expected=" << l.expected << " tol=" << l.tolerance;
      if (!l.note.empty()) log << " (" << l.note << ")";
      log << '\n';
    }
    write_atomic(report, table.str());

    bool all = true;
    for (const auto& [criterion, pass] : summarize(lines)) {
      log << (pass ? "PASS " : "FAIL ") << "criterion " << criterion << '\n';
      all = all && pass;
    }
    return all ? kExitOk : kExitValidationFailed;
  });
}

int cmd_fit_report(const fs::path& output, long draws, std::uint64_t seed, std::ostream& log) {
  return guarded(log, [&] {
    if (draws < 1) throw DomainError("draws must be >= 1");
    std::vector<double> hj, hjr;
    hj.reserve(draws);
    hjr.reserve(draws);
    Rng rng_j = make_stream(seed, 0, Stream::Bistatic);
    Rng rng_r = make_stream(seed, 0, Stream::Mono);
    for (long i = 0; i < draws; ++i) {
      hj.push_back(sample_hj(rng_j));
      hjr.push_back(sample_hjr(rng_r));
    }
    std::sort(hj.begin(), hj.end());
    std::sort(hjr.begin(), hjr.end());

    struct Reading {
      const char* name;
      FadingFit fit;
    };
    const Reading readings[] = {{"mean_matched", FadingFit::standard(EpsMonoReading::MeanMatched)},
                                {"literal", FadingFit::standard(EpsMonoReading::Literal)}};

    CsvTable table({"kind", "quantity", "reading", "x", "empirical_cdf", "fitted_cdf", "ks"});
    const auto empirical = [](const std::vector<double>& s, double x) {
      return static_cast<double>(std::upper_bound(s.begin(), s.end(), x) - s.begin()) /
             static_cast<double>(s.size());
    };
    for (const auto& r : readings) {
      for (double x : make_grid(0.0, 10.0, 0.05)) {
        table.add_row({"cdf", "h_j", r.name, format_double(x), format_double(empirical(hj, x)),
                       format_double(cdf_hj(x, r.fit)), ""});
      }
      for (double x : make_grid(0.0, 20.0, 0.1)) {
        table.add_row({"cdf", "h_jr", r.name, format_double(x), format_double(empirical(hjr, x)),
                       format_double(cdf_hjr(x, r.fit)), ""});
      }
    }
    for (const auto& r : readings) {
      const double ks_j = ks_distance(hj, [&](double x) { return cdf_hj(x, r.fit); });
      const double ks_r = ks_distance(hjr, [&](double x) { return cdf_hjr(x, r.fit); });
      table.add_row({"ks", "h_j", r.name, "", "", "", format_double(ks_j)});
      table.add_row({"ks", "h_jr", r.name, "", "", "", format_double(ks_r)});
      log << "KS " << r.name << ": h_j " << ks_j << ", h_jr " << ks_r << '\n';
    }
    write_atomic(output, table.str());
    return kExitOk;
  });
}

}  // namespace isac
