#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ecal/units.hpp"

using namespace ecal;

TEST_CASE("joules_to_kwh") {
  CHECK(joules_to_kwh(Energy(3.6e6)) == 1.0);
  CHECK(joules_to_kwh(Energy(0.0)) == 0.0);
  CHECK(joules_to_kwh(Energy(0.0264)) == doctest::Approx(7.333333333e-9).epsilon(1e-9));
}

TEST_CASE("wh_per_tb_to_j_per_bit") {
  CHECK(wh_per_tb_to_j_per_bit(0.65).value() == doctest::Approx(2.925e-10).epsilon(1e-12));
  CHECK(wh_per_tb_to_j_per_bit(1.2).value() == doctest::Approx(5.4e-10).epsilon(1e-12));
  CHECK(wh_per_tb_to_j_per_bit(0.0).value() == 0.0);
  CHECK_THROWS_AS(wh_per_tb_to_j_per_bit(-0.1), InvalidArgument);
}

TEST_CASE("kWh round trip holds to 1e-12 relative across 24 decades") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-12.0, 12.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    const double back = joules_to_kwh(kwh_to_joules(x));
    CHECK(std::abs(back - x) <= 1e-12 * x);
  }
}

TEST_CASE("constructors reject negative and non-finite values") {
  CHECK_THROWS_AS(Energy(-1.0), InvalidArgument);
  CHECK_THROWS_AS(Energy(std::numeric_limits<double>::infinity()), InvalidArgument);
  CHECK_THROWS_AS(Power(std::nan("")), InvalidArgument);
  CHECK_THROWS_AS(EnergyPerBit(-1e-9), InvalidArgument);
  CHECK_THROWS_AS(CarbonIntensity(-5.0), InvalidArgument);
  CHECK_THROWS_AS(BitRate(0.0), InvalidArgument);
  CHECK_THROWS_AS(BitRate(-1.0), InvalidArgument);
  CHECK_NOTHROW(Energy(0.0));
  CHECK_NOTHROW(BitRate(1e-30));
}

TEST_CASE("integer counts are exact and trap on overflow") {
  const BitCount big(std::numeric_limits<std::uint64_t>::max() - 1);
  CHECK((big + BitCount(1)).value() == std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(big + BitCount(2), InvalidArgument);
  CHECK_THROWS_AS(big * 2, InvalidArgument);
  CHECK_THROWS_AS(FlopCount(1) - FlopCount(2), InvalidArgument);
  CHECK((FlopCount(3'000'000'000ULL) * 3'000'000'000ULL).value() == 9'000'000'000'000'000'000ULL);
}

TEST_CASE("quantity arithmetic") {
  CHECK((Power(10e-3) / BitRate(1e3)).value() == doctest::Approx(1e-5));
  CHECK((EnergyPerBit(2.0) * BitCount(3)).value() == 6.0);
  CHECK((Power(140.0) * Duration(0.5)).value() == 70.0);
  CHECK((Energy(6.0) / BitCount(3)).value() == 2.0);
  CHECK_THROWS_AS(Energy(1.0) / BitCount(0), InvalidArgument);
}
