#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecal/lifecycle.hpp"
#include "ecal/units.hpp"

namespace ecal {

struct CarbonIntensityRecord {
  std::string country_code;  // two uppercase letters
  std::string country_name;
  int year = 0;
  CarbonIntensity ci;
};

// Annual average carbon intensity per country. Unique per (code, year).
class CarbonIntensityTable {
 public:
  // Throws DuplicateKeyError if (code, year) is already present.
  void add(CarbonIntensityRecord record);

  // Most recent year for the code unless `year` is given. Throws LookupError when absent.
  const CarbonIntensityRecord& find(std::string_view code, std::optional<int> year = std::nullopt) const;

  const std::vector<CarbonIntensityRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

 private:
  std::vector<CarbonIntensityRecord> records_;
};

inline constexpr std::string_view kCiHeader = "country_code,country_name,year,ci_g_per_kwh";

// CSV with header kCiHeader. Throws ParseError (with line number) for a missing
// or wrong header and malformed rows, DuplicateKeyError for a repeated (code, year).
CarbonIntensityTable load_ci_table(std::istream& in);

// The 2023 snapshot for DE, IE, SI, ES and FI, as shipped in data/ci_2023.csv.
std::string_view bundled_ci_2023_csv();
CarbonIntensityTable bundled_ci_2023();

// grams CO2eq = kWh * gCO2eq/kWh
double carbon_footprint(Energy e, CarbonIntensity ci);

struct CarbonRow {
  std::string country_code;
  std::string country_name;
  CarbonIntensity ci;
  std::uint64_t gamma = 1;
  double cf_development_g = 0.0;
  double cf_inference_g = 0.0;  // one inference request
  double cf_total_g = 0.0;      // development plus gamma requests
};

struct CarbonReport {
  std::vector<CarbonRow> rows;
};

// Rows grouped by gamma (input order); within a gamma, countries by descending CI.
// Countries come from the scenario, or all records when it names none.
CarbonReport cf_vs_gamma(const Scenario& s, const CarbonIntensityTable& records,
                         const std::vector<std::uint64_t>& gammas);

}  // namespace ecal
