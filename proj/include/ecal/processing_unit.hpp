#pragma once

#include "ecal/units.hpp"

namespace ecal {

// Compute-side parameters. Preprocessing is priced by power x time; training,
// evaluation and inference by an efficiency figure in FLOPs per joule.
struct ProcessingUnitProfile {
  Power p_pre = Power(140.0);
  double m_pu = 1e10;             // preprocessing throughput, FLOPs/s
  double flops_per_joule = 1.5351e8;

  // All three fields must be positive and finite.
  void validate() const;

  bool operator==(const ProcessingUnitProfile&) const = default;
};

}  // namespace ecal
