#pragma once

// Data cleaning and standardization. The executable routines carry an
// instrumented FLOP ledger; energy is always priced from the closed-form
// counts in preprocessing_flops().

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "ecal/processing_unit.hpp"
#include "ecal/transmission.hpp"
#include "ecal/units.hpp"

namespace ecal {

enum class StandardizationMethod { MinMax, Normalization };

std::string_view to_string(StandardizationMethod method);
// Accepts "minmax" and "normalization". Throws InvalidArgument otherwise.
StandardizationMethod parse_method(std::string_view text);

// Raw samples as collected. Any non-finite value is an invalid sample.
class RawDataset {
 public:
  RawDataset() = default;
  explicit RawDataset(std::vector<double> samples);

  const std::vector<double>& samples() const { return samples_; }
  std::uint64_t n_s() const { return samples_.size(); }
  std::uint64_t n_nan() const { return n_nan_; }

 private:
  std::vector<double> samples_;
  std::uint64_t n_nan_ = 0;
};

// One value per line. "NaN" (any case) or an empty line is an invalid sample.
// Throws ParseError naming the line for anything else that is not a number.
RawDataset read_raw_dataset(std::istream& in);

struct FlopLedger {
  std::uint64_t additions = 0;
  std::uint64_t subtractions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t divisions = 0;
  std::uint64_t square_roots = 0;

  FlopCount total() const {
    return FlopCount(additions + subtractions + multiplications + divisions + square_roots);
  }
};

struct CleanResult {
  std::vector<double> valid;
  FlopCount flops;
};

struct StandardizeResult {
  std::vector<double> values;
  FlopLedger ledger;
};

// Drops invalid samples, keeping order. Comparisons only, so zero FLOPs.
CleanResult clean(const RawDataset& data);

// (x - min) / (max - min). Throws InvalidArgument when empty, DegenerateRange when max == min.
StandardizeResult minmax_scale(std::span<const double> valid);

// (x - mean) / std with the population standard deviation over the valid samples.
// Throws InvalidArgument for fewer than two samples, DegenerateDeviation when std == 0.
StandardizeResult normalize(std::span<const double> valid);

// Closed-form counts: 2(n_s - n_nan) - 1 for min-max, 6(n_s - n_nan) - 3 for normalization.
// Requires n_nan < n_s.
FlopCount preprocessing_flops(StandardizationMethod method, std::uint64_t n_s, std::uint64_t n_nan);

struct PreprocessingCost {
  Duration t_pre;
  Energy e_pre;
};

PreprocessingCost preprocessing_energy(const ProcessingUnitProfile& pu, FlopCount m_pre);

// e_pre / (alpha * n_s). Throws InvalidArgument for an empty payload.
EnergyPerBit preprocessing_energy_per_bit(Energy e_pre, const PayloadSpec& spec);

}  // namespace ecal
