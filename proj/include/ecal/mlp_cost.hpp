#pragma once

// FLOP accounting for a fully connected MLP and the energy of training,
// evaluating and querying it.

#include <cstdint>
#include <span>
#include <vector>

#include "ecal/processing_unit.hpp"
#include "ecal/units.hpp"

namespace ecal {

// Layer widths [inputs, hidden..., outputs]. At least two layers, each at least one wide.
class MlpArchitecture {
 public:
  explicit MlpArchitecture(std::vector<std::uint64_t> layer_sizes);

  // Input width, `hidden_layers` layers of `hidden_width`, output width.
  static MlpArchitecture uniform(std::uint64_t inputs, std::uint64_t hidden_layers,
                                 std::uint64_t hidden_width, std::uint64_t outputs);

  std::span<const std::uint64_t> layer_sizes() const { return layers_; }
  std::size_t layer_count() const { return layers_.size(); }

  bool operator==(const MlpArchitecture&) const = default;

 private:
  std::vector<std::uint64_t> layers_;
};

struct TrainSplit {
  std::uint64_t n_s = 0;
  double beta = 1.0;
  std::uint64_t n_s_t = 0;  // training samples, floor(beta * n_s)
  std::uint64_t n_s_e = 0;  // evaluation samples, the remainder
};

// Throws InvalidArgument unless 0 < beta <= 1.
TrainSplit make_split(std::uint64_t n_s, double beta);

// Per-sample forward pass: sum over layers of 2*M[l-1]*M[l] (weights) + 2*M[l] (sum and activation).
FlopCount forward_flops(const MlpArchitecture& arch);

// n_epochs * n_train * forward_flops. Throws InvalidArgument for zero epochs.
FlopCount training_forward_flops(const MlpArchitecture& arch, std::uint64_t n_epochs, std::uint64_t n_train);

// Backward pass counted as twice the forward pass.
FlopCount training_total_flops(FlopCount m_mlp_fp);

// forward_flops * n_infer.
FlopCount inference_flops(const MlpArchitecture& arch, std::uint64_t n_infer);

struct TrainingEnergy {
  Energy e_train;
  // 3 * forward_flops / (alpha * flops_per_joule). Carries no epoch or sample factor.
  EnergyPerBit e_train_b;
};

TrainingEnergy training_energy(const MlpArchitecture& arch, std::uint64_t n_epochs, std::uint64_t n_train,
                               const ProcessingUnitProfile& pu, std::uint32_t alpha);

struct EvaluationEnergy {
  Energy e_eval;
  EnergyPerBit e_eval_b;
};

EvaluationEnergy evaluation_energy(const MlpArchitecture& arch, std::uint64_t n_eval,
                                   const ProcessingUnitProfile& pu, std::uint32_t alpha);

Energy inference_energy(const MlpArchitecture& arch, std::uint64_t n_infer, const ProcessingUnitProfile& pu);

// Same per-bit figure as evaluation.
EnergyPerBit inference_energy_per_bit(const MlpArchitecture& arch, const ProcessingUnitProfile& pu,
                                      std::uint32_t alpha);

}  // namespace ecal
