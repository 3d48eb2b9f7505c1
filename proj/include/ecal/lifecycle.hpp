#pragma once

// End-to-end aggregation: development cost, per-request operational cost,
// absolute lifecycle energy and the lifecycle energy per bit (eCAL).

#include <cstdint>
#include <string>
#include <vector>

#include "ecal/mlp_cost.hpp"
#include "ecal/preprocessing.hpp"
#include "ecal/processing_unit.hpp"
#include "ecal/storage.hpp"
#include "ecal/transmission.hpp"

namespace ecal {

struct Scenario {
  PayloadSpec spec{64, 256};
  std::uint64_t n_nan = 0;
  TechnologyProfile technology = technologies::ble5();
  StorageProfile storage = storage_media::hdd();
  StandardizationMethod method = StandardizationMethod::Normalization;
  double beta = 0.7;
  std::uint64_t n_epochs = 10;
  MlpArchitecture arch{{6, 5, 5, 5, 3}};
  std::uint64_t n_infer_batch = 77;       // samples per inference request
  std::uint64_t n_infer_nan = 0;          // invalid samples per inference request
  std::uint64_t gamma = 1000;             // inference requests served
  ProcessingUnitProfile pu;
  std::vector<std::string> countries;     // ISO codes; empty means every loaded country

  // Throws InvalidArgument on any out-of-range field.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

// 256 double samples over BLE, HDD, normalization, [6,5,5,5,3], 70/30 split,
// 10 epochs, 77-sample inference requests, gamma = 1000.
Scenario default_scenario();

struct DevelopmentCost {
  Energy e_t;
  Energy e_storage;
  Energy e_pre;
  Energy e_train;
  Energy e_eval;
  Energy e_d;
  BitCount b_t;       // transmitted bits for the full dataset
  BitCount bits;      // B_T + alpha(2 N_S + N_S,T + N_S,E)
  EnergyPerBit e_d_b;
  TrainSplit split;
};

struct InferencePhaseCost {
  Energy e_t;
  Energy e_storage;
  Energy e_pre;
  Energy e_inf;
  Energy e_inf_p;
  BitCount b_t;       // transmitted bits for one request of n_infer_batch samples
  BitCount bits;      // B_T' + 3 alpha N_I,P
  EnergyPerBit e_inf_p_b;
};

// Throws InvalidArgument when the scenario moves no bits.
DevelopmentCost development_energy(const Scenario& s);

// Transmission, storage and preprocessing re-priced for one request of n_infer_batch samples.
InferencePhaseCost inference_phase_energy(const Scenario& s);

// E_D + gamma * E_inf,p
Energy ecal_abs(const Scenario& s);
Energy ecal_abs_mean(const Scenario& s);
EnergyPerBit ecal(const Scenario& s);

struct LifecycleReport {
  DevelopmentCost development;
  InferencePhaseCost inference;
  std::uint64_t gamma = 1;
  Energy ecal_abs;
  Energy ecal_abs_mean;
  EnergyPerBit ecal;
  EnergyPerBit e_train_b;              // 3 M_FP / (alpha PU), no epoch factor
  EnergyPerBit e_train_per_trained_bit;  // E_train / (alpha N_S,T); zero when N_S,T = 0
  EnergyPerBit e_eval_b;
};

LifecycleReport evaluate(const Scenario& s);

struct GammaRow {
  std::uint64_t gamma;
  Energy ecal_abs;
  Energy ecal_abs_mean;
  EnergyPerBit ecal;
};

// One row per entry of `gammas`, in input order. Every gamma must be at least 1.
std::vector<GammaRow> gamma_sweep(const Scenario& s, const std::vector<std::uint64_t>& gammas);

}  // namespace ecal
