#include "ecal/preprocessing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>

namespace ecal {

namespace {

// Arithmetic that tallies every floating-point operation it performs.
class CountingOps {
 public:
  double add(double a, double b) {
    ++ledger_.additions;
    return a + b;
  }
  double sub(double a, double b) {
    ++ledger_.subtractions;
    return a - b;
  }
  double mul(double a, double b) {
    ++ledger_.multiplications;
    return a * b;
  }
  double div(double a, double b) {
    ++ledger_.divisions;
    return a / b;
  }
  double sqrt(double a) {
    ++ledger_.square_roots;
    return std::sqrt(a);
  }

  const FlopLedger& ledger() const { return ledger_; }

 private:
  FlopLedger ledger_;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_nan_token(const std::string& token) {
  if (token.size() != 3) return false;
  std::string lower = token;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  return lower == "nan";
}

}  // namespace

std::string_view to_string(StandardizationMethod method) {
  return method == StandardizationMethod::MinMax ? "minmax" : "normalization";
}

StandardizationMethod parse_method(std::string_view text) {
  if (text == "minmax") return StandardizationMethod::MinMax;
  if (text == "normalization") return StandardizationMethod::Normalization;
  throw InvalidArgument("unknown preprocessing method '" + std::string(text) +
                        "' (expected minmax or normalization)");
}

RawDataset::RawDataset(std::vector<double> samples) : samples_(std::move(samples)) {
  n_nan_ = static_cast<std::uint64_t>(
      std::count_if(samples_.begin(), samples_.end(), [](double x) { return !std::isfinite(x); }));
}

RawDataset read_raw_dataset(std::istream& in) {
  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string token = trim(line);
    if (token.empty() || is_nan_token(token)) {
      samples.push_back(std::nan(""));
      continue;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "not a number: '" + token + "'");
    }
    samples.push_back(value);
  }
  return RawDataset(std::move(samples));
}

CleanResult clean(const RawDataset& data) {
  CleanResult result;
  result.valid.reserve(data.n_s() - data.n_nan());
  std::copy_if(data.samples().begin(), data.samples().end(), std::back_inserter(result.valid),
               [](double x) { return std::isfinite(x); });
  return result;
}

StandardizeResult minmax_scale(std::span<const double> valid) {
  if (valid.empty()) throw InvalidArgument("min-max scaling needs at least one sample");

  CountingOps ops;
  double lo = valid[0];
  double hi = valid[0];
  for (std::size_t i = 1; i < valid.size(); ++i) {
    if (valid[i] < lo) lo = valid[i];
    if (valid[i] > hi) hi = valid[i];
  }
  if (!(hi > lo)) throw DegenerateRange("min-max scaling: all samples are equal");

  const double range = ops.sub(hi, lo);
  StandardizeResult result;
  result.values.reserve(valid.size());
  for (double x : valid) result.values.push_back(ops.div(ops.sub(x, lo), range));
  result.ledger = ops.ledger();
  return result;
}

StandardizeResult normalize(std::span<const double> valid) {
  if (valid.size() < 2) throw InvalidArgument("normalization needs at least two samples");

  CountingOps ops;
  const double n = static_cast<double>(valid.size());

  double sum = 0.0;
  for (double x : valid) sum = ops.add(sum, x);
  const double mean = ops.div(sum, n);

  double squared_deviations = 0.0;
  for (double x : valid) {
    const double d = ops.sub(x, mean);
    squared_deviations = ops.add(squared_deviations, ops.mul(d, d));
  }
  const double std_dev = ops.sqrt(ops.div(squared_deviations, n));
  if (std_dev == 0.0) throw DegenerateDeviation("normalization: standard deviation is zero");

  StandardizeResult result;
  result.values.reserve(valid.size());
  for (double x : valid) result.values.push_back(ops.div(ops.sub(x, mean), std_dev));
  result.ledger = ops.ledger();
  return result;
}

FlopCount preprocessing_flops(StandardizationMethod method, std::uint64_t n_s, std::uint64_t n_nan) {
  if (n_nan >= n_s) {
    throw InvalidArgument("preprocessing needs at least one valid sample (n_s=" + std::to_string(n_s) +
                          ", n_nan=" + std::to_string(n_nan) + ")");
  }
  const FlopCount valid(n_s - n_nan);
  switch (method) {
    case StandardizationMethod::MinMax:
      return valid * 2 - FlopCount(1);
    case StandardizationMethod::Normalization:
      return valid * 6 - FlopCount(3);
  }
  throw InvalidArgument("unknown standardization method");
}

PreprocessingCost preprocessing_energy(const ProcessingUnitProfile& pu, FlopCount m_pre) {
  pu.validate();
  const Duration t_pre(static_cast<double>(m_pre.value()) / pu.m_pu);
  return {t_pre, pu.p_pre * t_pre};
}

EnergyPerBit preprocessing_energy_per_bit(Energy e_pre, const PayloadSpec& spec) {
  const BitCount bits = payload_bits(spec);
  if (bits.value() == 0) throw InvalidArgument("preprocessing energy per bit of an empty payload");
  return e_pre / bits;
}

}  // namespace ecal
