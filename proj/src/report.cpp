#include "ecal/report.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "ecal/errors.hpp"

namespace ecal {

namespace {

std::string quote_if_needed(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

ReportTable::ReportTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void ReportTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw InvalidArgument("report row has " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

std::size_t ReportTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw LookupError("no column '" + name + "'");
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *d, std::chars_format::general, 12);
    return std::string(buf.data(), ptr);
  }
  return quote_if_needed(std::get<std::string>(cell));
}

std::string to_csv(const ReportTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns().size(); ++i) {
    if (i) out += ',';
    out += quote_if_needed(table.columns()[i]);
  }
  out += '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ReportTable& table) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows()) {
    auto cells = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      std::visit([&](const auto& v) { cells.push_back(v); }, cell);
    }
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::size_t write_report(const ReportTable& table, std::ostream& out) {
  const std::string csv = to_csv(table);
  out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  return csv.size();
}

std::size_t write_report(const ReportTable& table, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(destination.string(), "cannot open for writing");
  const std::size_t n = write_report(table, out);
  out.flush();
  if (!out) throw IoError(destination.string(), "write failed");
  return n;
}

}  // namespace ecal
