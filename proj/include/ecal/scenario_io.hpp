#pragma once

// JSON scenario documents. The schema is strict: unknown keys are rejected
// and every error names the offending field path.
//
//   samples:int                         (required)
//   invalid_samples:int = 0
//   bit_precision:int = 64
//   technology: "ble5"|"zigbee"|"lorawan" | {name?, f_u, omega_u, p_t_w, r_t_bps, packets_override?}
//   storage: "hdd"|"ssd" | {name?, wh_per_tb}
//   preprocessing: "minmax"|"normalization" = "normalization"
//   split_ratio:real = 0.7
//   epochs:int                          (required)
//   mlp: {layers:[int]}                 (required)
//   inference_batch:int                 (required)
//   inference_invalid_samples:int = 0
//   gamma:int                           (required)
//   processing_unit: {preprocessing_power_w, preprocessing_flops_per_s, flops_per_joule}
//   countries: [string]
//   sweeps: {gamma:[int], overhead_pct:[real], invalid_samples:[int]}

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ecal/lifecycle.hpp"

namespace ecal {

struct Sweeps {
  std::vector<std::uint64_t> gamma;
  std::vector<double> overhead_pct;
  std::vector<std::uint64_t> invalid_samples;

  bool empty() const { return gamma.empty() && overhead_pct.empty() && invalid_samples.empty(); }
  bool operator==(const Sweeps&) const = default;
};

struct ScenarioDocument {
  Scenario scenario;
  Sweeps sweeps;

  bool operator==(const ScenarioDocument&) const = default;
};

// Throws SchemaError (field path + reason) or ResolutionError (unknown profile name).
ScenarioDocument parse_scenario(std::string_view text);

// Throws IoError when the file cannot be read, otherwise as parse_scenario.
ScenarioDocument load_scenario_file(const std::filesystem::path& path);

// Fully explicit document: profiles are written inline, every default spelled out.
std::string serialize_scenario(const ScenarioDocument& doc);

}  // namespace ecal
