#include "ecal/storage.hpp"

namespace ecal {

StorageProfile storage_by_name(std::string_view name) {
  if (name == "hdd") return storage_media::hdd();
  if (name == "ssd") return storage_media::ssd();
  throw ResolutionError("unknown storage '" + std::string(name) + "' (built-ins: hdd, ssd)");
}

EnergyPerBit storage_energy_per_bit(const StorageProfile& profile) {
  return wh_per_tb_to_j_per_bit(profile.wh_per_tb);
}

Energy storage_energy(const StorageProfile& profile, BitCount payload) {
  return storage_energy_per_bit(profile) * payload;
}

}  // namespace ecal
