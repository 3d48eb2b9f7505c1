#include "ecal/mlp_cost.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ecal {

namespace {

double as_double(FlopCount f) { return static_cast<double>(f.value()); }

void require_alpha(std::uint32_t alpha) {
  if (alpha == 0) throw InvalidArgument("bit precision must be positive");
}

}  // namespace

MlpArchitecture::MlpArchitecture(std::vector<std::uint64_t> layer_sizes) : layers_(std::move(layer_sizes)) {
  if (layers_.size() < 2) throw InvalidArgument("MLP needs at least an input and an output layer");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i] == 0) throw InvalidArgument("MLP layer " + std::to_string(i) + " has zero width");
  }
}

MlpArchitecture MlpArchitecture::uniform(std::uint64_t inputs, std::uint64_t hidden_layers,
                                         std::uint64_t hidden_width, std::uint64_t outputs) {
  std::vector<std::uint64_t> layers;
  layers.reserve(hidden_layers + 2);
  layers.push_back(inputs);
  for (std::uint64_t k = 0; k < hidden_layers; ++k) layers.push_back(hidden_width);
  layers.push_back(outputs);
  return MlpArchitecture(std::move(layers));
}

TrainSplit make_split(std::uint64_t n_s, double beta) {
  if (!std::isfinite(beta) || !(beta > 0.0) || beta > 1.0) {
    throw InvalidArgument("split ratio beta must be in (0, 1]");
  }
  // The epsilon absorbs representation error in products such as 0.29 * 100.
  const double scaled = beta * static_cast<double>(n_s);
  auto n_s_t = static_cast<std::uint64_t>(std::floor(scaled + 1e-9 * std::max(1.0, scaled)));
  if (n_s_t > n_s) n_s_t = n_s;
  return {n_s, beta, n_s_t, n_s - n_s_t};
}

FlopCount forward_flops(const MlpArchitecture& arch) {
  const auto m = arch.layer_sizes();
  FlopCount total;
  for (std::size_t l = 1; l < m.size(); ++l) {
    total = total + FlopCount(m[l - 1]) * m[l] * 2 + FlopCount(m[l]) * 2;
  }
  return total;
}

FlopCount training_forward_flops(const MlpArchitecture& arch, std::uint64_t n_epochs, std::uint64_t n_train) {
  if (n_epochs == 0) throw InvalidArgument("training needs at least one epoch");
  return forward_flops(arch) * n_train * n_epochs;
}

FlopCount training_total_flops(FlopCount m_mlp_fp) { return m_mlp_fp * 3; }

FlopCount inference_flops(const MlpArchitecture& arch, std::uint64_t n_infer) {
  return forward_flops(arch) * n_infer;
}

TrainingEnergy training_energy(const MlpArchitecture& arch, std::uint64_t n_epochs, std::uint64_t n_train,
                               const ProcessingUnitProfile& pu, std::uint32_t alpha) {
  pu.validate();
  require_alpha(alpha);
  const FlopCount total = training_total_flops(training_forward_flops(arch, n_epochs, n_train));
  const double per_bit_flops = as_double(training_total_flops(forward_flops(arch)));
  return {Energy(as_double(total) / pu.flops_per_joule),
          EnergyPerBit(per_bit_flops / (static_cast<double>(alpha) * pu.flops_per_joule))};
}

EvaluationEnergy evaluation_energy(const MlpArchitecture& arch, std::uint64_t n_eval,
                                   const ProcessingUnitProfile& pu, std::uint32_t alpha) {
  pu.validate();
  return {Energy(as_double(inference_flops(arch, n_eval)) / pu.flops_per_joule),
          inference_energy_per_bit(arch, pu, alpha)};
}

Energy inference_energy(const MlpArchitecture& arch, std::uint64_t n_infer, const ProcessingUnitProfile& pu) {
  pu.validate();
  return Energy(as_double(inference_flops(arch, n_infer)) / pu.flops_per_joule);
}

EnergyPerBit inference_energy_per_bit(const MlpArchitecture& arch, const ProcessingUnitProfile& pu,
                                      std::uint32_t alpha) {
  pu.validate();
  require_alpha(alpha);
  return EnergyPerBit(as_double(forward_flops(arch)) / (static_cast<double>(alpha) * pu.flops_per_joule));
}

}  // namespace ecal
