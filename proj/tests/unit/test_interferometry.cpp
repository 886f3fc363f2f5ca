#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "relsat/errors.hpp"
#include "relsat/interferometry.hpp"
#include "relsat/units.hpp"

using namespace relsat;

TEST(NeutronBeam, SpeedFollowsDeBroglie) {
  const NeutronBeam b = NeutronBeam::thermal(1.8e-10);
  EXPECT_NEAR(b.speed() * b.mass() * b.wavelength() / Constants::h, 1.0, 1e-12);
  EXPECT_THROW(NeutronBeam(0.0, 1e-10), DomainError);
  EXPECT_THROW(NeutronBeam(1e-27, -1.0), DomainError);
}

TEST(CowNeutronPhase, Examples) {
  const NeutronBeam b = NeutronBeam::thermal(1.8e-10);
  EXPECT_EQ(cowNeutronPhase(b, 8e-4, 0.0, 9.81), 0.0);
  const double p1 = cowNeutronPhase(b, 8e-4, kPi / 2, 9.81);
  const double p2 = cowNeutronPhaseVelocityForm(b, 8e-4, kPi / 2, 9.81);
  EXPECT_NEAR(p1 / p2, 1.0, 1e-10);
  EXPECT_NEAR(cowNeutronPhase(b, 16e-4, kPi / 2, 9.81) / p1, 2.0, 1e-14);
  EXPECT_THROW(cowNeutronPhase(b, -1.0, 0.1, 9.81), DomainError);
}

TEST(CowNeutronPhase, TwoFormsAgreeForRandomBeams) {
  relsat::testing::Gen g(41);
  for (int i = 0; i < 500; ++i) {
    const NeutronBeam b(g.uniform(1e-27, 1e-26), g.uniform(1e-11, 1e-9));
    const double area = g.uniform(1e-5, 1e-2);
    const double tilt = g.uniform(-kPi, kPi);
    const double grav = g.uniform(1.0, 20.0);
    const double p1 = cowNeutronPhase(b, area, tilt, grav);
    const double p2 = cowNeutronPhaseVelocityForm(b, area, tilt, grav);
    EXPECT_NEAR(p1, p2, 1e-10 * std::abs(p2));
    EXPECT_EQ(cowNeutronPhase(b, area, tilt, -grav), -p1);
  }
}

TEST(GravRedshift, Examples) {
  EXPECT_NEAR(gravRedshiftWeakField(400e3, 9.81), 4.36e-11, 0.01e-11);
  EXPECT_EQ(gravRedshiftWeakField(0.0, 9.81), 0.0);
  const double mu = EarthParams::standard().mu;
  const double r = EarthParams::standard().meanRadius;
  const double exact = gravRedshiftTwoPotential(mu, r, r + 400e3);
  EXPECT_NEAR(exact, 4.1e-11, 0.1e-11);
  EXPECT_LT(std::abs(exact / gravRedshiftWeakField(400e3, 9.81) - 1.0), 0.07);
  EXPECT_THROW(gravRedshiftWeakField(-1.0, 9.81), DomainError);
}

TEST(OpticalCowPhase, Examples) {
  const OpticalLink link{800e-9, 6e3, 400e3, 9.81};
  const double phase = opticalCowPhase(link);
  EXPECT_NEAR(phase, 2.05, 2.05 * 0.05);
  EXPECT_EQ(opticalCowPhase(OpticalLink{800e-9, 0.0, 400e3, 9.81}), 0.0);
  EXPECT_NEAR(opticalCowPhase(OpticalLink{1600e-9, 6e3, 400e3, 9.81}) / phase, 0.5, 1e-15);
  EXPECT_EQ(phase, (kTwoPi * 6e3 / 800e-9) * gravRedshiftWeakField(400e3, 9.81));
  EXPECT_EQ(opticalCowPhase(OpticalLink{800e-9, 6e3, 400e3, -9.81}), -phase);
  EXPECT_THROW(opticalCowPhase(OpticalLink{0.0, 6e3, 400e3, 9.81}), DomainError);
}

TEST(FibreDelay, IndexConvention) {
  EXPECT_NEAR(fibreDelay(6e3), 20e-6, 0.02e-6);
  EXPECT_NEAR(fibreDelay(6e3, 1.47) / fibreDelay(6e3), 1.47, 1e-15);
  EXPECT_THROW(fibreDelay(6e3, 0.9), DomainError);
}

TEST(Displacement, Examples) {
  EXPECT_NEAR(displacementDuringDelay(8e3, 20e-6), 0.16, 1e-3);
  EXPECT_EQ(displacementDuringDelay(8e3, 0.0), 0.0);
  EXPECT_NEAR(displacementDuringDelay(7.5e3, 20e-6), 0.15, 1e-12);
  EXPECT_THROW(displacementDuringDelay(-1.0, 1.0), DomainError);
}
