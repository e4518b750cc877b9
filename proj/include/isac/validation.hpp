#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isac {

enum class Verdict { Pass, Fail, Info };

// One report line. `id` is "<criterion>" or "<criterion>.<part>"; a
// criterion passes when all of its lines pass. Info lines are diagnostics.
struct CheckLine {
  std::string id;
  std::string measured;
  std::string expected;
  std::string tolerance;
  Verdict verdict = Verdict::Info;
  std::string note;
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  long trials = 10000;           // agreement campaign
  long fit_draws = 1000000;      // fading-fit KS
  long determinism_trials = 2000;
  unsigned threads = 0;
  bool diagnostics = true;
};

std::string criterion_of(const std::string& id);
std::string to_string(Verdict v);

std::vector<CheckLine> check_sim_agreement(const ValidationOptions& opt);
std::vector<CheckLine> check_closed_form();
std::vector<CheckLine> check_radar_only_equivalence();
std::vector<CheckLine> check_ph_m_interchange();
std::vector<CheckLine> check_symmetry();
std::vector<CheckLine> check_fading_fit(const ValidationOptions& opt);
std::vector<CheckLine> check_headline_db(const ValidationOptions& opt);
std::vector<CheckLine> check_gain_percentages();
std::vector<CheckLine> check_throughput_minimum();
std::vector<CheckLine> check_determinism(const ValidationOptions& opt);

std::vector<CheckLine> run_validation(const ValidationOptions& opt);

// Criteria in report order with their aggregated verdicts.
std::vector<std::pair<std::string, bool>> summarize(const std::vector<CheckLine>& lines);

}  // namespace isac
