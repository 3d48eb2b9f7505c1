#include "ecal/processing_unit.hpp"

#include <cmath>

namespace ecal {

void ProcessingUnitProfile::validate() const {
  if (!(p_pre.value() > 0.0)) throw InvalidArgument("processing unit: preprocessing power must be positive");
  if (!std::isfinite(m_pu) || !(m_pu > 0.0)) {
    throw InvalidArgument("processing unit: preprocessing throughput must be positive");
  }
  if (!std::isfinite(flops_per_joule) || !(flops_per_joule > 0.0)) {
    throw InvalidArgument("processing unit: flops_per_joule must be positive");
  }
}

}  // namespace ecal
