#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isac/validation.hpp"

namespace isac {

// Exit statuses of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

enum class Engine { Analytic, Sim, Both };

struct SweepSpec {
  std::string variable;  // r1, r2, p_h, m_slots or k_total
  std::vector<double> values;
  bool meters = false;       // distances in metres instead of v
  std::optional<double> k;   // k_total only: r2 = k - r1, values are r1
  bool throughput = false;   // append log(1 + theta) * value
};

int cmd_ccdf(const std::filesystem::path& scenario, const std::filesystem::path& output,
             Engine engine, std::ostream& log);
int cmd_sweep(const std::filesystem::path& scenario, const SweepSpec& spec,
              const std::filesystem::path& output, Engine engine, std::ostream& log);
// Writes <dir>/validation_report.csv.
int cmd_validate(const std::filesystem::path& output_dir, const ValidationOptions& options,
                 std::ostream& log);
int cmd_fit_report(const std::filesystem::path& output, long draws, std::uint64_t seed,
                   std::ostream& log);

}  // namespace isac
