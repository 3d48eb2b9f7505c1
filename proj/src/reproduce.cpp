#include "ecal/reproduce.hpp"

#include <algorithm>

#include "ecal/mlp_cost.hpp"
#include "ecal/preprocessing.hpp"
#include "ecal/storage.hpp"
#include "ecal/transmission.hpp"

namespace ecal {

namespace {

Cell integer(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell real(double v) { return v; }
Cell text(std::string_view v) { return std::string(v); }

const std::vector<std::uint64_t>& reference_gammas() {
  static const std::vector<std::uint64_t> gammas = {1,    2,    5,    10,    20,    50,    100,   200,
                                                    500,  1000, 2000, 5000,  10000, 20000, 50000, 100000};
  return gammas;
}

std::vector<TechnologyProfile> technologies_for(const ReproduceOptions& options) {
  auto profiles = builtin_technologies();
  if (options.strict_eq2) {
    for (auto& p : profiles) p = p.strict();
  }
  return profiles;
}

ReportTable table1(const ReproduceOptions& options) {
  ReportTable t({"technology", "f_u", "packets", "omega_u", "b_t", "overhead_pct"});
  const PayloadSpec spec{64, 256};
  for (const auto& p : technologies_for(options)) {
    t.add_row({text(p.name), integer(p.f_u.value()), integer(packet_count(p, spec)), integer(p.omega_u.value()),
               integer(transmitted_bits(p, spec).value()),
               real(100.0 * static_cast<double>(p.omega_u.value()) / static_cast<double>(p.f_u.value()))});
  }
  return t;
}

ReportTable table2() {
  ReportTable t({"technology", "p_t_mw", "r_t_bps", "e_t_b_j"});
  for (const auto& p : builtin_technologies()) {
    t.add_row({text(p.name), real(p.p_t.value() * 1e3), real(p.r_t.value()),
               real(transmission_energy_per_bit(p).value())});
  }
  return t;
}

// Transmitted bits against payload: fixed 2000-bit packets at several overhead
// percentages, and the built-in technologies on the plain ceil(payload / F_U) rule.
ReportTable fig2() {
  ReportTable t({"series", "n_s", "payload_bits", "packets", "b_t"});
  std::vector<TechnologyProfile> series;
  for (double pct : {1.0, 30.0, 50.0, 70.0}) {
    series.push_back(generic_technology(2000, pct, Power(10e-3), BitRate(1e3)));
  }
  for (const auto& p : builtin_technologies()) series.push_back(p.strict());

  for (const auto& p : series) {
    for (std::uint64_t n_s = 0; n_s <= 1024; n_s += 32) {
      const PayloadSpec spec{64, n_s};
      t.add_row({text(p.name), integer(n_s), integer(payload_bits(spec).value()), integer(packet_count(p, spec)),
                 integer(transmitted_bits(p, spec).value())});
    }
  }
  return t;
}

ReportTable fig4(const ReproduceOptions& options) {
  ReportTable t({"technology", "e_t_b_j", "b_t", "e_t_j"});
  const PayloadSpec spec{64, 256};
  for (const auto& p : technologies_for(options)) {
    const BitCount b_t = transmitted_bits(p, spec);
    t.add_row({text(p.name), real(transmission_energy_per_bit(p).value()), integer(b_t.value()),
               real(transmission_energy(p, b_t).value())});
  }
  return t;
}

// 256 double samples once a minute for 24 hours.
ReportTable fig5(const ReproduceOptions& options) {
  ReportTable t({"technology", "time_s", "e_t_cum_j"});
  for (const auto& p : technologies_for(options)) {
    for (const auto& point : cumulative_transmission_energy(p, {64, 256}, 60.0, 86400.0)) {
      t.add_row({text(p.name), real(point.time_s), real(point.energy.value())});
    }
  }
  return t;
}

ReportTable fig6() {
  ReportTable t({"method", "n_s", "n_nan", "flops", "t_pre_s", "e_pre_j"});
  const ProcessingUnitProfile pu;
  for (auto method : {StandardizationMethod::MinMax, StandardizationMethod::Normalization}) {
    for (std::uint64_t n_s : {128u, 256u, 512u, 1024u}) {
      for (std::uint64_t n_nan : {0u, 8u, 16u, 32u, 64u, 96u, 127u}) {
        const FlopCount flops = preprocessing_flops(method, n_s, n_nan);
        const auto cost = preprocessing_energy(pu, flops);
        t.add_row({text(to_string(method)), integer(n_s), integer(n_nan), integer(flops.value()),
                   real(cost.t_pre.value()), real(cost.e_pre.value())});
      }
    }
  }
  return t;
}

ReportTable fig7() {
  ReportTable t({"method", "n_s", "flops", "e_pre_j", "e_pre_b_j"});
  const ProcessingUnitProfile pu;
  const PayloadSpec spec{64, 256};
  for (auto method : {StandardizationMethod::MinMax, StandardizationMethod::Normalization}) {
    const FlopCount flops = preprocessing_flops(method, spec.n_s, 0);
    const Energy e_pre = preprocessing_energy(pu, flops).e_pre;
    t.add_row({text(to_string(method)), integer(spec.n_s), integer(flops.value()), real(e_pre.value()),
               real(preprocessing_energy_per_bit(e_pre, spec).value())});
  }
  return t;
}

ReportTable fig8() {
  const LifecycleReport r = evaluate(default_scenario());
  ReportTable t({"component", "energy_j"});
  t.add_row({text("transmission"), real(r.development.e_t.value())});
  t.add_row({text("storage"), real(r.development.e_storage.value())});
  t.add_row({text("preprocessing"), real(r.development.e_pre.value())});
  t.add_row({text("training"), real(r.development.e_train.value())});
  t.add_row({text("evaluation"), real(r.development.e_eval.value())});
  t.add_row({text("inference"), real(r.inference.e_inf.value())});
  t.add_row({text("development_total"), real(r.development.e_d.value())});
  t.add_row({text("inference_request_total"), real(r.inference.e_inf_p.value())});
  return t;
}

// Panel a: [6, M x K, 3] for 10 epochs over 256 samples. Panel b: [6,5,5,5,3] over epochs and samples.
ReportTable fig9ab() {
  ReportTable t({"panel", "hidden_width", "hidden_layers", "n_epochs", "n_s_t", "m_fp", "m_mlp_fp"});
  for (std::uint64_t k = 1; k <= 10; ++k) {
    for (std::uint64_t m = 1; m <= 20; ++m) {
      const auto arch = MlpArchitecture::uniform(6, k, m, 3);
      t.add_row({text("a"), integer(m), integer(k), integer(10), integer(256),
                 integer(forward_flops(arch).value()), integer(training_forward_flops(arch, 10, 256).value())});
    }
  }
  const auto arch = MlpArchitecture::uniform(6, 3, 5, 3);
  for (std::uint64_t epochs : {1u, 5u, 10u, 20u, 30u, 40u, 50u}) {
    for (std::uint64_t n : {64u, 128u, 179u, 256u, 512u, 1024u}) {
      t.add_row({text("b"), integer(5), integer(3), integer(epochs), integer(n), integer(forward_flops(arch).value()),
                 integer(training_forward_flops(arch, epochs, n).value())});
    }
  }
  return t;
}

ReportTable fig11() {
  const Scenario s = default_scenario();
  const Energy e_inf_p = inference_phase_energy(s).e_inf_p;
  ReportTable t({"gamma", "ecal_abs_j", "ecal_abs_mean_j", "e_inf_p_j"});
  for (const auto& row : gamma_sweep(s, reference_gammas())) {
    t.add_row({integer(row.gamma), real(row.ecal_abs.value()), real(row.ecal_abs_mean.value()), real(e_inf_p.value())});
  }
  return t;
}

ReportTable fig12() {
  const Scenario s = default_scenario();
  const EnergyPerBit e_d_b = development_energy(s).e_d_b;
  const EnergyPerBit e_inf_p_b = inference_phase_energy(s).e_inf_p_b;
  ReportTable t({"gamma", "e_d_b_j", "e_inf_p_b_j", "ecal_j_per_b"});
  for (const auto& row : gamma_sweep(s, reference_gammas())) {
    t.add_row({integer(row.gamma), real(e_d_b.value()), real(e_inf_p_b.value()), real(row.ecal.value())});
  }
  return t;
}

ReportTable table3(const ReproduceOptions& options) {
  Scenario s = default_scenario();
  s.gamma = 1;
  ReportTable t({"country_code", "country_name", "ci_g_per_kwh", "cf_development_g", "cf_inference_g"});
  for (const auto& row : cf_vs_gamma(s, options.ci, {1}).rows) {
    t.add_row({text(row.country_code), text(row.country_name), real(row.ci.value()), real(row.cf_development_g),
               real(row.cf_inference_g)});
  }
  return t;
}

ReportTable fig13(const ReproduceOptions& options) {
  ReportTable t({"gamma", "country_code", "ci_g_per_kwh", "cf_total_g"});
  for (const auto& row : cf_vs_gamma(default_scenario(), options.ci, reference_gammas()).rows) {
    t.add_row({integer(row.gamma), text(row.country_code), real(row.ci.value()), real(row.cf_total_g)});
  }
  return t;
}

}  // namespace

ReportTable lifecycle_table(const LifecycleReport& r) {
  ReportTable t({"quantity", "value"});
  const auto& d = r.development;
  const auto& i = r.inference;
  auto add = [&](std::string_view name, Cell v) { t.add_row({text(name), std::move(v)}); };
  add("gamma", integer(r.gamma));
  add("n_s_t", integer(d.split.n_s_t));
  add("n_s_e", integer(d.split.n_s_e));
  add("E_T", real(d.e_t.value()));
  add("E_storage", real(d.e_storage.value()));
  add("E_pre", real(d.e_pre.value()));
  add("E_train", real(d.e_train.value()));
  add("E_eval", real(d.e_eval.value()));
  add("E_D", real(d.e_d.value()));
  add("B_T_dev", integer(d.b_t.value()));
  add("dev_bits", integer(d.bits.value()));
  add("E_D_b", real(d.e_d_b.value()));
  add("E_train_b", real(r.e_train_b.value()));
  add("E_train_per_trained_bit", real(r.e_train_per_trained_bit.value()));
  add("E_eval_b", real(r.e_eval_b.value()));
  add("E_T_inf", real(i.e_t.value()));
  add("E_storage_inf", real(i.e_storage.value()));
  add("E_pre_inf", real(i.e_pre.value()));
  add("E_inf", real(i.e_inf.value()));
  add("E_inf_p", real(i.e_inf_p.value()));
  add("B_T_inf", integer(i.b_t.value()));
  add("inf_bits", integer(i.bits.value()));
  add("E_inf_p_b", real(i.e_inf_p_b.value()));
  add("eCAL_abs", real(r.ecal_abs.value()));
  add("eCAL_abs_mean", real(r.ecal_abs_mean.value()));
  add("eCAL", real(r.ecal.value()));
  return t;
}

ReportTable gamma_sweep_table(const std::vector<GammaRow>& rows) {
  ReportTable t({"gamma", "ecal_abs_j", "ecal_abs_mean_j", "ecal_j_per_b"});
  for (const auto& row : rows) {
    t.add_row({integer(row.gamma), real(row.ecal_abs.value()), real(row.ecal_abs_mean.value()), real(row.ecal.value())});
  }
  return t;
}

ReportTable carbon_table(const CarbonReport& report) {
  ReportTable t({"gamma", "country_code", "country_name", "ci_g_per_kwh", "cf_development_g", "cf_inference_g",
                 "cf_total_g"});
  for (const auto& row : report.rows) {
    t.add_row({integer(row.gamma), text(row.country_code), text(row.country_name), real(row.ci.value()),
               real(row.cf_development_g), real(row.cf_inference_g), real(row.cf_total_g)});
  }
  return t;
}

ReportTable overhead_sweep_table(const Scenario& s, const std::vector<double>& overhead_pct) {
  ReportTable t({"overhead_pct", "f_u", "omega_u", "packets", "b_t", "e_t_j", "e_t_b_j"});
  for (double pct : overhead_pct) {
    const auto p = generic_technology(s.technology.f_u.value(), pct, s.technology.p_t, s.technology.r_t);
    const BitCount b_t = transmitted_bits(p, s.spec);
    t.add_row({real(pct), integer(p.f_u.value()), integer(p.omega_u.value()), integer(packet_count(p, s.spec)),
               integer(b_t.value()), real(transmission_energy(p, b_t).value()),
               real(transmission_energy_per_bit(p).value())});
  }
  return t;
}

ReportTable invalid_sample_sweep_table(const Scenario& s, const std::vector<std::uint64_t>& n_nan) {
  ReportTable t({"n_s", "n_nan", "method", "flops", "t_pre_s", "e_pre_j", "e_pre_b_j"});
  for (auto nan : n_nan) {
    const FlopCount flops = preprocessing_flops(s.method, s.spec.n_s, nan);
    const auto cost = preprocessing_energy(s.pu, flops);
    t.add_row({integer(s.spec.n_s), integer(nan), text(to_string(s.method)), integer(flops.value()),
               real(cost.t_pre.value()), real(cost.e_pre.value()),
               real(preprocessing_energy_per_bit(cost.e_pre, s.spec).value())});
  }
  return t;
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> targets = {"table1", "table2", "fig2",  "fig4",  "fig5",   "fig6", "fig7",
                                                   "fig8",   "fig9ab", "fig11", "fig12", "table3", "fig13"};
  return targets;
}

ReportTable reproduce(std::string_view target, const ReproduceOptions& options) {
  if (target == "table1") return table1(options);
  if (target == "table2") return table2();
  if (target == "fig2") return fig2();
  if (target == "fig4") return fig4(options);
  if (target == "fig5") return fig5(options);
  if (target == "fig6") return fig6();
  if (target == "fig7") return fig7();
  if (target == "fig8") return fig8();
  if (target == "fig9ab") return fig9ab();
  if (target == "fig11") return fig11();
  if (target == "fig12") return fig12();
  if (target == "table3") return table3(options);
  if (target == "fig13") return fig13(options);

  std::string known;
  for (const auto& t : reproduce_targets()) known += (known.empty() ? "" : ", ") + t;
  throw LookupError("unknown reproduce target '" + std::string(target) + "' (known: " + known + ")");
}

}  // namespace ecal
