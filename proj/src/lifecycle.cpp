#include "ecal/lifecycle.hpp"

namespace ecal {

namespace {

void require_gamma(std::uint64_t gamma) {
  if (gamma == 0) throw InvalidArgument("gamma must be at least 1");
}

Energy lifecycle_energy(const DevelopmentCost& dev, const InferencePhaseCost& inf, std::uint64_t gamma) {
  return dev.e_d + static_cast<double>(gamma) * inf.e_inf_p;
}

EnergyPerBit lifecycle_energy_per_bit(const DevelopmentCost& dev, const InferencePhaseCost& inf,
                                      std::uint64_t gamma) {
  return lifecycle_energy(dev, inf, gamma) / (dev.bits + inf.bits * gamma);
}

}  // namespace

void Scenario::validate() const {
  if (spec.alpha == 0) throw InvalidArgument("bit precision must be positive");
  if (n_nan >= spec.n_s) throw InvalidArgument("dataset has no valid samples");
  if (n_epochs == 0) throw InvalidArgument("epochs must be at least 1");
  if (n_infer_batch == 0) throw InvalidArgument("inference batch must be at least 1");
  if (n_infer_nan >= n_infer_batch) throw InvalidArgument("inference batch has no valid samples");
  require_gamma(gamma);
  make_split(spec.n_s, beta);
  technology.validate();
  wh_per_tb_to_j_per_bit(storage.wh_per_tb);
  pu.validate();
}

Scenario default_scenario() { return Scenario{}; }

DevelopmentCost development_energy(const Scenario& s) {
  s.validate();
  DevelopmentCost c;
  c.split = make_split(s.spec.n_s, s.beta);
  c.b_t = transmitted_bits(s.technology, s.spec);
  c.bits = c.b_t + BitCount(2 * s.spec.n_s + c.split.n_s_t + c.split.n_s_e) * s.spec.alpha;
  if (c.bits.value() == 0) throw InvalidArgument("development phase moves no bits");

  const BitCount payload = payload_bits(s.spec);
  c.e_t = transmission_energy(s.technology, c.b_t);
  c.e_storage = storage_energy(s.storage, payload);
  c.e_pre = preprocessing_energy(s.pu, preprocessing_flops(s.method, s.spec.n_s, s.n_nan)).e_pre;
  c.e_train = training_energy(s.arch, s.n_epochs, c.split.n_s_t, s.pu, s.spec.alpha).e_train;
  c.e_eval = evaluation_energy(s.arch, c.split.n_s_e, s.pu, s.spec.alpha).e_eval;
  c.e_d = c.e_t + c.e_storage + c.e_pre + c.e_train + c.e_eval;
  c.e_d_b = c.e_d / c.bits;
  return c;
}

InferencePhaseCost inference_phase_energy(const Scenario& s) {
  s.validate();
  const PayloadSpec request{s.spec.alpha, s.n_infer_batch};
  InferencePhaseCost c;
  c.b_t = transmitted_bits(s.technology, request);
  c.bits = c.b_t + BitCount(s.n_infer_batch) * s.spec.alpha * 3;
  c.e_t = transmission_energy(s.technology, c.b_t);
  c.e_storage = storage_energy(s.storage, payload_bits(request));
  c.e_pre = preprocessing_energy(s.pu, preprocessing_flops(s.method, s.n_infer_batch, s.n_infer_nan)).e_pre;
  c.e_inf = inference_energy(s.arch, s.n_infer_batch, s.pu);
  c.e_inf_p = c.e_t + c.e_storage + c.e_pre + c.e_inf;
  c.e_inf_p_b = c.e_inf_p / c.bits;
  return c;
}

Energy ecal_abs(const Scenario& s) {
  return lifecycle_energy(development_energy(s), inference_phase_energy(s), s.gamma);
}

Energy ecal_abs_mean(const Scenario& s) {
  return ecal_abs(s) / static_cast<double>(s.gamma);
}

EnergyPerBit ecal(const Scenario& s) {
  return lifecycle_energy_per_bit(development_energy(s), inference_phase_energy(s), s.gamma);
}

LifecycleReport evaluate(const Scenario& s) {
  LifecycleReport r;
  r.development = development_energy(s);
  r.inference = inference_phase_energy(s);
  r.gamma = s.gamma;
  r.ecal_abs = lifecycle_energy(r.development, r.inference, s.gamma);
  r.ecal_abs_mean = r.ecal_abs / static_cast<double>(s.gamma);
  r.ecal = lifecycle_energy_per_bit(r.development, r.inference, s.gamma);

  const auto& split = r.development.split;
  r.e_train_b = training_energy(s.arch, s.n_epochs, split.n_s_t, s.pu, s.spec.alpha).e_train_b;
  if (split.n_s_t > 0) {
    r.e_train_per_trained_bit = r.development.e_train / (BitCount(split.n_s_t) * s.spec.alpha);
  }
  r.e_eval_b = inference_energy_per_bit(s.arch, s.pu, s.spec.alpha);
  return r;
}

std::vector<GammaRow> gamma_sweep(const Scenario& s, const std::vector<std::uint64_t>& gammas) {
  for (auto g : gammas) require_gamma(g);
  const DevelopmentCost dev = development_energy(s);
  const InferencePhaseCost inf = inference_phase_energy(s);

  std::vector<GammaRow> rows;
  rows.reserve(gammas.size());
  for (auto g : gammas) {
    const Energy total = lifecycle_energy(dev, inf, g);
    rows.push_back({g, total, total / static_cast<double>(g), lifecycle_energy_per_bit(dev, inf, g)});
  }
  return rows;
}

}  // namespace ecal
