#pragma once

// Uplink data-collection cost: bits on air for a payload split into packets,
// and the radio energy to send them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecal/units.hpp"

namespace ecal {

struct PayloadSpec {
  std::uint32_t alpha = 64;  // bits per sample
  std::uint64_t n_s = 0;     // sample count

  bool operator==(const PayloadSpec&) const = default;
};

struct TechnologyProfile {
  std::string name;
  BitCount f_u;        // max payload bits per packet
  BitCount omega_u;    // overhead bits per packet
  Power p_t;           // transmit power
  BitRate r_t;         // transmit rate
  std::optional<std::uint64_t> packets_override;

  // Throws InvalidArgument if f_u is zero or the override is zero.
  void validate() const;

  // Same profile with the packet override dropped, so counts follow ceil(payload / f_u).
  TechnologyProfile strict() const;

  bool operator==(const TechnologyProfile&) const = default;
};

namespace technologies {
TechnologyProfile ble5();
TechnologyProfile zigbee();
TechnologyProfile lorawan();
}  // namespace technologies

// Built-in profiles in table order.
std::vector<TechnologyProfile> builtin_technologies();

// Looks up "ble5", "zigbee" or "lorawan". Throws ResolutionError otherwise.
TechnologyProfile technology_by_name(std::string_view name);

// Fixed packet size with overhead given as a percentage of it.
TechnologyProfile generic_technology(std::uint64_t f_u, double overhead_pct, Power p_t, BitRate r_t);

BitCount payload_bits(const PayloadSpec& spec);

// ceil(payload / f_u), or the profile's override. Empty payloads need no packets.
// Throws InvalidArgument when the override is smaller than the payload requires.
std::uint64_t packet_count(const TechnologyProfile& profile, const PayloadSpec& spec);

BitCount transmitted_bits(const TechnologyProfile& profile, const PayloadSpec& spec);

EnergyPerBit transmission_energy_per_bit(const TechnologyProfile& profile);

Energy transmission_energy(const TechnologyProfile& profile, BitCount b_t);

struct CumulativePoint {
  double time_s;
  Energy energy;
};

// One transmission of `spec` every `interval_s` seconds from t = 0 up to `horizon_s`.
// Returns floor(horizon / interval) + 1 points starting at (0, 0 J).
std::vector<CumulativePoint> cumulative_transmission_energy(const TechnologyProfile& profile,
                                                            const PayloadSpec& spec,
                                                            double interval_s, double horizon_s);

}  // namespace ecal
