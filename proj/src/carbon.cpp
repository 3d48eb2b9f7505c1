#include "ecal/carbon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

namespace ecal {

namespace {

constexpr std::string_view kBundled2023 =
    "country_code,country_name,year,ci_g_per_kwh\n"
    "DE,Germany,2023,425\n"
    "IE,Ireland,2023,382\n"
    "SI,Slovenia,2023,239\n"
    "ES,Spain,2023,160\n"
    "FI,Finland,2023,92\n";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool valid_code(const std::string& code) {
  return code.size() == 2 && std::isupper(static_cast<unsigned char>(code[0])) &&
         std::isupper(static_cast<unsigned char>(code[1]));
}

template <class T>
bool parse_number(const std::string& text, T& out) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

void CarbonIntensityTable::add(CarbonIntensityRecord record) {
  for (const auto& r : records_) {
    if (r.country_code == record.country_code && r.year == record.year) {
      throw DuplicateKeyError("duplicate carbon intensity for " + record.country_code + " " +
                              std::to_string(record.year));
    }
  }
  records_.push_back(std::move(record));
}

const CarbonIntensityRecord& CarbonIntensityTable::find(std::string_view code, std::optional<int> year) const {
  const CarbonIntensityRecord* best = nullptr;
  for (const auto& r : records_) {
    if (r.country_code != code) continue;
    if (year && r.year != *year) continue;
    if (!best || r.year > best->year) best = &r;
  }
  if (!best) throw LookupError("no carbon intensity for country '" + std::string(code) + "'");
  return *best;
}

CarbonIntensityTable load_ci_table(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(line_no, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCiHeader) throw ParseError(line_no, "expected header '" + std::string(kCiHeader) + "'");

  CarbonIntensityTable table;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto fields = split_fields(line);
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    if (!valid_code(fields[0])) throw ParseError(line_no, "country code must be two uppercase letters");
    if (fields[1].empty()) throw ParseError(line_no, "empty country name");

    int year = 0;
    if (!parse_number(fields[2], year)) throw ParseError(line_no, "bad year '" + fields[2] + "'");
    double ci = 0.0;
    if (!parse_number(fields[3], ci) || !std::isfinite(ci)) {
      throw ParseError(line_no, "bad carbon intensity '" + fields[3] + "'");
    }
    if (ci < 0.0) throw ParseError(line_no, "carbon intensity must be non-negative");

    table.add({fields[0], fields[1], year, CarbonIntensity(ci)});
  }
  return table;
}

std::string_view bundled_ci_2023_csv() { return kBundled2023; }

CarbonIntensityTable bundled_ci_2023() {
  std::istringstream in{std::string(kBundled2023)};
  return load_ci_table(in);
}

double carbon_footprint(Energy e, CarbonIntensity ci) { return joules_to_kwh(e) * ci.value(); }

CarbonReport cf_vs_gamma(const Scenario& s, const CarbonIntensityTable& records,
                         const std::vector<std::uint64_t>& gammas) {
  std::vector<const CarbonIntensityRecord*> selected;
  if (s.countries.empty()) {
    for (const auto& r : records.records()) selected.push_back(&records.find(r.country_code));
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  } else {
    for (const auto& code : s.countries) selected.push_back(&records.find(code));
  }
  std::stable_sort(selected.begin(), selected.end(), [](const auto* a, const auto* b) {
    if (a->ci != b->ci) return a->ci > b->ci;
    return a->country_code < b->country_code;
  });

  const auto sweep = gamma_sweep(s, gammas);
  const DevelopmentCost dev = development_energy(s);
  const InferencePhaseCost inf = inference_phase_energy(s);

  CarbonReport report;
  for (const auto& row : sweep) {
    for (const auto* rec : selected) {
      report.rows.push_back({rec->country_code, rec->country_name, rec->ci, row.gamma,
                             carbon_footprint(dev.e_d, rec->ci), carbon_footprint(inf.e_inf_p, rec->ci),
                             carbon_footprint(row.ecal_abs, rec->ci)});
    }
  }
  return report;
}

}  // namespace ecal
