#pragma once

#include <string>
#include <string_view>

#include "ecal/units.hpp"

namespace ecal {

// Write-once storage cost. Reads are not charged.
struct StorageProfile {
  std::string name;
  double wh_per_tb = 0.0;

  bool operator==(const StorageProfile&) const = default;
};

namespace storage_media {
inline StorageProfile hdd() { return {"hdd", 0.65}; }
inline StorageProfile ssd() { return {"ssd", 1.2}; }
}  // namespace storage_media

// "hdd" or "ssd"; throws ResolutionError otherwise.
StorageProfile storage_by_name(std::string_view name);

EnergyPerBit storage_energy_per_bit(const StorageProfile& profile);
Energy storage_energy(const StorageProfile& profile, BitCount payload);

}  // namespace ecal
