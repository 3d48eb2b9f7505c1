#pragma once

// Typed quantities used throughout the model. Canonical units are fixed:
// joules, watts, seconds, bits, bits/s, FLOPs, J/bit and gCO2eq/kWh.
// Conversions happen only at the boundary (see the free functions at the end).

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "ecal/errors.hpp"

namespace ecal {

namespace detail {

struct NonNegative {
  static constexpr bool strictly_positive = false;
};
struct Positive {
  static constexpr bool strictly_positive = true;
};

}  // namespace detail

// A finite real quantity. Tag supplies the unit name and the sign rule.
template <class Tag>
class RealQuantity {
 public:
  constexpr RealQuantity() = default;

  explicit RealQuantity(double value) : value_(value) {
    if (!std::isfinite(value)) {
      throw InvalidArgument(std::string(Tag::name) + " must be finite");
    }
    if constexpr (Tag::strictly_positive) {
      if (!(value > 0.0)) throw InvalidArgument(std::string(Tag::name) + " must be positive");
    } else {
      if (value < 0.0) throw InvalidArgument(std::string(Tag::name) + " must be non-negative");
    }
  }

  constexpr double value() const { return value_; }

  friend constexpr auto operator<=>(RealQuantity, RealQuantity) = default;

 private:
  double value_ = Tag::strictly_positive ? 1.0 : 0.0;
};

// Exact non-negative integer count. Arithmetic traps on overflow instead of wrapping.
template <class Tag>
class Count {
 public:
  constexpr Count() = default;
  constexpr explicit Count(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t value() const { return value_; }

  friend constexpr auto operator<=>(Count, Count) = default;

  friend Count operator+(Count a, Count b) {
    if (b.value_ > std::numeric_limits<std::uint64_t>::max() - a.value_) {
      throw InvalidArgument(std::string(Tag::name) + " overflow");
    }
    return Count(a.value_ + b.value_);
  }
  friend Count operator-(Count a, Count b) {
    if (b.value_ > a.value_) throw InvalidArgument(std::string(Tag::name) + " underflow");
    return Count(a.value_ - b.value_);
  }
  friend Count operator*(Count a, std::uint64_t k) {
    if (k != 0 && a.value_ > std::numeric_limits<std::uint64_t>::max() / k) {
      throw InvalidArgument(std::string(Tag::name) + " overflow");
    }
    return Count(a.value_ * k);
  }
  friend Count operator*(std::uint64_t k, Count a) { return a * k; }

 private:
  std::uint64_t value_ = 0;
};

struct EnergyTag : detail::NonNegative {
  static constexpr const char* name = "energy";
};
struct PowerTag : detail::NonNegative {
  static constexpr const char* name = "power";
};
struct DurationTag : detail::NonNegative {
  static constexpr const char* name = "duration";
};
struct BitRateTag : detail::Positive {
  static constexpr const char* name = "bit rate";
};
struct EnergyPerBitTag : detail::NonNegative {
  static constexpr const char* name = "energy per bit";
};
struct CarbonIntensityTag : detail::NonNegative {
  static constexpr const char* name = "carbon intensity";
};
struct BitCountTag {
  static constexpr const char* name = "bit count";
};
struct FlopCountTag {
  static constexpr const char* name = "FLOP count";
};

using Energy = RealQuantity<EnergyTag>;                    // J
using Power = RealQuantity<PowerTag>;                      // W
using Duration = RealQuantity<DurationTag>;                // s
using BitRate = RealQuantity<BitRateTag>;                  // b/s
using EnergyPerBit = RealQuantity<EnergyPerBitTag>;        // J/b
using CarbonIntensity = RealQuantity<CarbonIntensityTag>;  // gCO2eq/kWh
using BitCount = Count<BitCountTag>;                       // b
using FlopCount = Count<FlopCountTag>;                     // FLOPs

inline Energy operator+(Energy a, Energy b) { return Energy(a.value() + b.value()); }
inline Energy operator*(double k, Energy e) { return Energy(k * e.value()); }
inline Energy operator*(Energy e, double k) { return Energy(e.value() * k); }
inline Energy operator/(Energy e, double k) { return Energy(e.value() / k); }

inline EnergyPerBit operator/(Power p, BitRate r) { return EnergyPerBit(p.value() / r.value()); }
inline Energy operator*(EnergyPerBit e, BitCount b) {
  return Energy(e.value() * static_cast<double>(b.value()));
}
inline Energy operator*(Power p, Duration t) { return Energy(p.value() * t.value()); }

// Throws InvalidArgument for zero bits.
inline EnergyPerBit operator/(Energy e, BitCount b) {
  if (b.value() == 0) throw InvalidArgument("energy per bit over zero bits");
  return EnergyPerBit(e.value() / static_cast<double>(b.value()));
}

inline constexpr double kJoulesPerKwh = 3.6e6;
inline constexpr double kJoulesPerWh = 3600.0;
inline constexpr double kBitsPerTerabyte = 8e12;  // 1 TB = 10^12 bytes

inline double joules_to_kwh(Energy e) { return e.value() / kJoulesPerKwh; }
inline Energy kwh_to_joules(double kwh) { return Energy(kwh * kJoulesPerKwh); }

// Storage density in Wh per (decimal) terabyte to joules per bit.
inline EnergyPerBit wh_per_tb_to_j_per_bit(double wh_per_tb) {
  if (!std::isfinite(wh_per_tb) || wh_per_tb < 0.0) {
    throw InvalidArgument("storage density must be a non-negative Wh/TB value");
  }
  return EnergyPerBit(wh_per_tb * kJoulesPerWh / kBitsPerTerabyte);
}

}  // namespace ecal
