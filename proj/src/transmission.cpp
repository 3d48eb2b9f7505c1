#include "ecal/transmission.hpp"

#include <cmath>

namespace ecal {

void TechnologyProfile::validate() const {
  if (f_u.value() == 0) throw InvalidArgument("technology " + name + ": f_u must be positive");
  if (packets_override && *packets_override == 0) {
    throw InvalidArgument("technology " + name + ": packets_override must be positive");
  }
}

TechnologyProfile TechnologyProfile::strict() const {
  TechnologyProfile copy = *this;
  copy.packets_override.reset();
  return copy;
}

namespace technologies {

TechnologyProfile ble5() {
  return {"ble5", BitCount(2120), BitCount(168), Power(3.1628e-3), BitRate(1e6), std::nullopt};
}

TechnologyProfile zigbee() {
  return {"zigbee", BitCount(1288), BitCount(272), Power(10e-3), BitRate(250e3), std::nullopt};
}

// The published table lists 9 packets for 256 double samples, one more than
// ceil(16384 / 2048). The override reproduces that row; strict() drops it.
TechnologyProfile lorawan() {
  return {"lorawan", BitCount(2048), BitCount(268), Power(100e-3), BitRate(50e3), 9};
}

}  // namespace technologies

std::vector<TechnologyProfile> builtin_technologies() {
  return {technologies::ble5(), technologies::zigbee(), technologies::lorawan()};
}

TechnologyProfile technology_by_name(std::string_view name) {
  for (auto& profile : builtin_technologies()) {
    if (profile.name == name) return profile;
  }
  throw ResolutionError("unknown technology '" + std::string(name) +
                        "' (built-ins: ble5, zigbee, lorawan)");
}

TechnologyProfile generic_technology(std::uint64_t f_u, double overhead_pct, Power p_t, BitRate r_t) {
  if (!std::isfinite(overhead_pct) || overhead_pct < 0.0) {
    throw InvalidArgument("overhead percentage must be non-negative");
  }
  const double omega = std::round(static_cast<double>(f_u) * overhead_pct / 100.0);
  char label[64];
  std::snprintf(label, sizeof label, "overhead_%gpct", overhead_pct);
  TechnologyProfile profile{label, BitCount(f_u), BitCount(static_cast<std::uint64_t>(omega)), p_t, r_t,
                            std::nullopt};
  profile.validate();
  return profile;
}

BitCount payload_bits(const PayloadSpec& spec) {
  return BitCount(spec.n_s) * spec.alpha;
}

std::uint64_t packet_count(const TechnologyProfile& profile, const PayloadSpec& spec) {
  profile.validate();
  const std::uint64_t payload = payload_bits(spec).value();
  if (payload == 0) return 0;
  const std::uint64_t needed = (payload + profile.f_u.value() - 1) / profile.f_u.value();
  if (profile.packets_override) {
    if (*profile.packets_override < needed) {
      throw InvalidArgument("technology " + profile.name + ": packets_override " +
                            std::to_string(*profile.packets_override) + " is below the " +
                            std::to_string(needed) + " packets the payload needs");
    }
    return *profile.packets_override;
  }
  return needed;
}

BitCount transmitted_bits(const TechnologyProfile& profile, const PayloadSpec& spec) {
  return payload_bits(spec) + profile.omega_u * packet_count(profile, spec);
}

EnergyPerBit transmission_energy_per_bit(const TechnologyProfile& profile) {
  return profile.p_t / profile.r_t;
}

Energy transmission_energy(const TechnologyProfile& profile, BitCount b_t) {
  return transmission_energy_per_bit(profile) * b_t;
}

std::vector<CumulativePoint> cumulative_transmission_energy(const TechnologyProfile& profile,
                                                            const PayloadSpec& spec,
                                                            double interval_s, double horizon_s) {
  if (!std::isfinite(interval_s) || interval_s <= 0.0) {
    throw InvalidArgument("interval must be positive");
  }
  if (!std::isfinite(horizon_s) || horizon_s <= 0.0) {
    throw InvalidArgument("horizon must be positive");
  }
  if (interval_s > horizon_s) throw InvalidArgument("interval exceeds horizon");

  const Energy per_transmission = transmission_energy(profile, transmitted_bits(profile, spec));
  const auto steps = static_cast<std::uint64_t>(std::floor(horizon_s / interval_s));

  std::vector<CumulativePoint> series;
  series.reserve(steps + 1);
  for (std::uint64_t k = 0; k <= steps; ++k) {
    const double kd = static_cast<double>(k);
    series.push_back({kd * interval_s, kd * per_transmission});
  }
  return series;
}

}  // namespace ecal
