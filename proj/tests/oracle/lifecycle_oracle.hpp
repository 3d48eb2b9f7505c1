#pragma once

// Spreadsheet-style recomputation of the lifecycle energies from raw numbers.
// Uses only plain doubles and integers, none of the library code paths.

#include <cmath>
#include <cstdint>
#include <vector>

namespace ecal::oracle {

struct RawScenario {
  double alpha = 64;
  double n_s = 256;
  double n_nan = 0;
  double f_u = 2120, omega_u = 168, p_t_w = 3.1628e-3, r_t_bps = 1e6;  // BLE 5.0
  double packets_override = 0;                                         // 0 = none
  double wh_per_tb = 0.65;                                             // HDD
  bool normalization = true;
  double beta = 0.7;
  double epochs = 10;
  std::vector<double> layers = {6, 5, 5, 5, 3};
  double n_ip = 77;
  double gamma = 1000;
  double p_pre_w = 140, m_pu = 1e10, flops_per_joule = 1.5351e8;
};

struct RawResult {
  double e_t, e_storage, e_pre, e_train, e_eval, e_d, dev_bits, e_d_b;
  double e_t_inf, e_storage_inf, e_pre_inf, e_inf, e_inf_p, inf_bits, e_inf_p_b;
  double ecal_abs, ecal_abs_mean, ecal;
};

inline RawResult recompute(const RawScenario& s) {
  auto packets = [&](double n) {
    if (n == 0) return 0.0;
    return s.packets_override > 0 ? s.packets_override : std::ceil(s.alpha * n / s.f_u);
  };
  auto b_t = [&](double n) { return s.alpha * n + packets(n) * s.omega_u; };
  auto pre_flops = [&](double n, double nan) {
    return s.normalization ? 6 * (n - nan) - 3 : 2 * (n - nan) - 1;
  };
  double m_fp = 0;
  for (std::size_t l = 1; l < s.layers.size(); ++l) m_fp += 2 * s.layers[l - 1] * s.layers[l] + 2 * s.layers[l];

  const double n_st = std::floor(s.beta * s.n_s + 1e-9);
  const double n_se = s.n_s - n_st;
  const double j_per_bit_storage = s.wh_per_tb * 3600.0 / 8e12;

  RawResult r{};
  r.e_t = s.p_t_w / s.r_t_bps * b_t(s.n_s);
  r.e_storage = j_per_bit_storage * s.alpha * s.n_s;
  r.e_pre = s.p_pre_w * pre_flops(s.n_s, s.n_nan) / s.m_pu;
  r.e_train = 3 * s.epochs * n_st * m_fp / s.flops_per_joule;
  r.e_eval = m_fp * n_se / s.flops_per_joule;
  r.e_d = r.e_t + r.e_storage + r.e_pre + r.e_train + r.e_eval;
  r.dev_bits = b_t(s.n_s) + s.alpha * (2 * s.n_s + n_st + n_se);
  r.e_d_b = r.e_d / r.dev_bits;

  r.e_t_inf = s.p_t_w / s.r_t_bps * b_t(s.n_ip);
  r.e_storage_inf = j_per_bit_storage * s.alpha * s.n_ip;
  r.e_pre_inf = s.p_pre_w * pre_flops(s.n_ip, 0) / s.m_pu;
  r.e_inf = m_fp * s.n_ip / s.flops_per_joule;
  r.e_inf_p = r.e_t_inf + r.e_storage_inf + r.e_pre_inf + r.e_inf;
  r.inf_bits = b_t(s.n_ip) + 3 * s.alpha * s.n_ip;
  r.e_inf_p_b = r.e_inf_p / r.inf_bits;

  r.ecal_abs = r.e_d + s.gamma * r.e_inf_p;
  r.ecal_abs_mean = r.ecal_abs / s.gamma;
  r.ecal = r.ecal_abs / (r.dev_bits + s.gamma * r.inf_bits);
  return r;
}

}  // namespace ecal::oracle
