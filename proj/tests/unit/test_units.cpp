#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

using namespace relsat;

TEST(Constants, AreSiAndConsistent) {
  EXPECT_EQ(Constants::c, 299792458.0);
  EXPECT_NEAR(Constants::h / (kTwoPi * Constants::hbar), 1.0, 1e-15);
  EXPECT_GT(Constants::G, 0.0);
  EXPECT_GT(Constants::kB, 0.0);
  EXPECT_EQ(Constants::g0, 9.81);
}

TEST(EarthParams, StandardFromCgs) {
  const EarthParams e = EarthParams::standard();
  EXPECT_DOUBLE_EQ(e.mass, 5.98e24);
  EXPECT_NEAR(e.angularMomentum, 5.86e33, 1e19);
  EXPECT_NEAR(e.mu / (Constants::G * e.mass), 1.0, 1e-10);
  EXPECT_NEAR(e.mu / 3.986e14, 1.0, 5e-3);
}

TEST(EarthParams, RejectsNonPositiveInputs) {
  EXPECT_THROW(EarthParams::fromCgs(-1.0, 5.86e40, 6.4e6, 6.4e6, 7e-5), DomainError);
  EXPECT_THROW(EarthParams::fromCgs(5.98e27, 0.0, 6.4e6, 6.4e6, 7e-5), DomainError);
}

TEST(CgsConversion, Examples) {
  EXPECT_NEAR(cgsAngularMomentumToSI(5.86e40), 5.86e33, 5.86e33 * 1e-15);
  EXPECT_EQ(cgsAngularMomentumToSI(0.0), 0.0);
  EXPECT_DOUBLE_EQ(cgsAngularMomentumToSI(1e7), 1.0);
}

TEST(ConvertAngle, Examples) {
  EXPECT_NEAR(convertAngle(1.0, AngleUnit::MilliArcsecond), 206264806.247, 1e-3);
  EXPECT_NEAR(convertAngle(1.0, AngleUnit::MilliArcsecond), 180.0 * 3600.0 * 1000.0 / kPi, 1e-6);
  for (AngleUnit u : {AngleUnit::Radian, AngleUnit::Degree, AngleUnit::Arcsecond,
                      AngleUnit::MilliArcsecond}) {
    EXPECT_EQ(convertAngle(0.0, u), 0.0);
  }
  EXPECT_DOUBLE_EQ(convertAngle(kPi, AngleUnit::Degree), 180.0);
  EXPECT_DOUBLE_EQ(convertAngle(kPi, "deg"), 180.0);
}

TEST(ConvertAngle, UnknownTagIsConfigError) {
  EXPECT_THROW(parseAngleUnit("grad"), ConfigError);
  EXPECT_THROW(convertAngle(1.0, "furlong"), ConfigError);
  EXPECT_EQ(parseAngleUnit("mas"), AngleUnit::MilliArcsecond);
  EXPECT_EQ(parseAngleUnit("arcsec"), AngleUnit::Arcsecond);
}

TEST(ConvertAngle, RoundTrip) {
  for (double x : {1e-9, 0.3, 1.0, 2.5, -4.0, 1e6}) {
    for (AngleUnit u : {AngleUnit::Radian, AngleUnit::Degree, AngleUnit::Arcsecond,
                        AngleUnit::MilliArcsecond}) {
      EXPECT_NEAR(toRadians(convertAngle(x, u), u) / x, 1.0, 1e-14);
    }
  }
}

TEST(Quantity, MismatchedUnitsRejected) {
  const Quantity a(1.0, Unit::Meter);
  const Quantity b(2.0, Unit::Second);
  EXPECT_THROW((void)(a + b), std::invalid_argument);
  EXPECT_THROW((void)(a - b), std::invalid_argument);
  EXPECT_THROW((void)(a < b), std::invalid_argument);
  EXPECT_EQ((a + Quantity(2.0, Unit::Meter)).value(), 3.0);
  EXPECT_TRUE(a < Quantity(2.0, Unit::Meter));
  EXPECT_EQ(unitSymbol(Unit::MilliArcsecond), "mas");
}
