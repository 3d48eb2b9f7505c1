#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ecal {

using Cell = std::variant<std::int64_t, double, std::string>;

// Rectangular table of typed cells, rendered as CSV or JSON.
class ReportTable {
 public:
  ReportTable() = default;
  explicit ReportTable(std::vector<std::string> columns);

  // Throws InvalidArgument unless the row has one cell per column.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  // Index of the named column; throws LookupError when absent.
  std::size_t column(const std::string& name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

// Integers verbatim, reals with 12 significant digits, text quoted when needed.
std::string format_cell(const Cell& cell);

// Header row first, LF line endings.
std::string to_csv(const ReportTable& table);

// {"columns": [...], "rows": [[...], ...]}, numbers as JSON numbers.
std::string to_json(const ReportTable& table);

// Returns bytes written. Throws IoError naming the path on failure.
std::size_t write_report(const ReportTable& table, const std::filesystem::path& destination);
std::size_t write_report(const ReportTable& table, std::ostream& out);

}  // namespace ecal
