#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace isac {

// Locale-independent shortest-safe rendering with 15 significant digits.
std::string format_double(double x);
std::string format_optional(const std::optional<double>& x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);
  std::size_t rows() const noexcept { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Writes to a sibling temporary file and renames it into place, so a
// failure never leaves a partial file at `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace isac
