#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "relsat/errors.hpp"
#include "relsat/kinematics.hpp"
#include "relsat/units.hpp"

using namespace relsat;

namespace {

constexpr double c = Constants::c;

// Source at the origin at t = 0; one photon is stored for t1 and detected at
// the origin, the other travels X1 before detection.
std::pair<Event, Event> memoryPair(double x1, double t1) {
  return {Event(t1, 0.0), Event(x1 / c, x1)};
}

}  // namespace

TEST(InvariantInterval, MemoryDelayGeometry) {
  const auto [eg, es] = memoryPair(1e6, 20e-6);
  const IntervalResult r = invariantInterval(eg, es);
  EXPECT_EQ(r.kind, IntervalKind::Spacelike);
  EXPECT_NEAR(r.magnitude, 1.09e5, 1e3);
  EXPECT_NEAR(r.magnitude, std::sqrt(1e12 - std::pow(1e6 - c * 20e-6, 2)), 1e-6);
}

TEST(InvariantInterval, GroundLinkCase) {
  const Event a(0.0, 0.0);
  const Event b(138e3 / c, 144e3);
  const IntervalResult r = invariantInterval(a, b);
  EXPECT_EQ(r.kind, IntervalKind::Spacelike);
  EXPECT_NEAR(r.magnitude, 41e3, 1e3);
}

TEST(InvariantInterval, CoincidentAndTimelike) {
  const Event e(1.0, 2.0, 3.0, 4.0);
  const IntervalResult z = invariantInterval(e, e);
  EXPECT_EQ(z.kind, IntervalKind::Lightlike);
  EXPECT_EQ(z.magnitude, 0.0);
  const IntervalResult t = invariantInterval(Event(0.0, 0.0), Event(2.0, 0.0));
  EXPECT_EQ(t.kind, IntervalKind::Timelike);
  EXPECT_DOUBLE_EQ(t.magnitude, 2.0);
  EXPECT_EQ(invariantInterval(Event(0.0, 0.0), Event(1.0, c)).kind, IntervalKind::Lightlike);
}

TEST(SimultaneityBoost, MemoryDelayGeometry) {
  const auto [eg, es] = memoryPair(1e6, 20e-6);
  const SimultaneityFrame f = simultaneityBoostSpeed(eg, es);
  EXPECT_NEAR(f.beta, 0.994, 1e-3);
  EXPECT_NEAR(f.beta, (1e6 - c * 20e-6) / 1e6, 1e-12);
  EXPECT_NEAR(f.gamma, 9.14, 0.01);
}

TEST(SimultaneityBoost, AlreadySimultaneousAndErrors) {
  EXPECT_EQ(simultaneityBoostSpeed(Event(0.0, 0.0), Event(0.0, 5.0)).beta, 0.0);
  EXPECT_THROW(simultaneityBoostSpeed(Event(0.0, 0.0), Event(1.0, 1.0)), DomainError);
  EXPECT_THROW(simultaneityBoostSpeed(Event(0.0, 0.0), Event(1.0, c)), DomainError);
}

TEST(SimultaneityBoost, BoostedPairIsSimultaneous) {
  relsat::testing::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Event a = g.event(1e-3, 1e6);
    const Event b(a.t + g.uniform(-1e-3, 1e-3), a.x + g.uniform(4e5, 1e6) * g.unitVector());
    const IntervalResult r = invariantInterval(a, b);
    if (r.kind != IntervalKind::Spacelike) continue;
    const SimultaneityFrame f = simultaneityBoostSpeed(a, b);
    const Event ap = toMovingFrame(a, f.beta * f.axis);
    const Event bp = toMovingFrame(b, f.beta * f.axis);
    const double dx = (b.x - a.x).norm();
    EXPECT_LE(std::abs(bp.t - ap.t), 1e-10 * dx / c);
    EXPECT_NEAR((bp.x - ap.x).norm() / r.magnitude, 1.0, 1e-10);
  }
}

TEST(TimingShift, Examples) {
  EXPECT_NEAR(timingShiftPerDistance(15e3) * 1e3, 166.9e-12, 0.1e-12);
  EXPECT_EQ(timingShiftPerDistance(0.0), 0.0);
  EXPECT_NEAR(timingShiftPerDistance(7.5e3) * 1e3, 83.4e-12, 0.1e-12);
  EXPECT_THROW(timingShiftPerDistance(c), DomainError);
}

TEST(MinSeparation, Examples) {
  EXPECT_NEAR(minSeparationForSwitching(15e3, 10e-9), 60e3, 1e3);
  EXPECT_NEAR(minSeparationForSwitching(15e3, 250e-9), 1500e3, 10e3);
  EXPECT_EQ(minSeparationForSwitching(15e3, 0.0), 0.0);
  EXPECT_THROW(minSeparationForSwitching(0.0, 1e-9), DomainError);
}

TEST(MinSeparation, InvertsTimingShift) {
  relsat::testing::Gen g(3);
  for (int i = 0; i < 100; ++i) {
    const double v = g.uniform(1.0, 1e5);
    const double tau = g.uniform(1e-12, 1e-3);
    EXPECT_NEAR(timingShiftPerDistance(v) * minSeparationForSwitching(v, tau) / tau, 1.0, 1e-15);
  }
}

TEST(LightTravelTime, Examples) {
  EXPECT_NEAR(lightTravelTime(1e6), 3.34e-3, 0.01e-3);
  EXPECT_NEAR(lightTravelTime(1e8), 0.334, 0.001);
  EXPECT_NEAR(lightTravelTime(3.8e8), 1.27, 0.01);
  EXPECT_EQ(lightTravelTime(0.0), 0.0);
}

TEST(CausallyConnected, Examples) {
  const Event o(0.0, 0.0);
  EXPECT_FALSE(causallyConnected(o, Event(0.0, 1.0)));
  EXPECT_TRUE(causallyConnected(o, Event(1.0, 1.0)));
  const auto [eg, es] = memoryPair(1e6, 20e-6);
  EXPECT_FALSE(causallyConnected(eg, es, 1.0));
  EXPECT_TRUE(causallyConnected(eg, es, 1.5));
  EXPECT_THROW(causallyConnected(eg, es, 0.5), DomainError);
}

TEST(CausallyConnected, AgreesWithIntervalKind) {
  relsat::testing::Gen g(5);
  for (int i = 0; i < 500; ++i) {
    const Event a = g.event(1e-3, 3e5);
    const Event b = g.event(1e-3, 3e5);
    const IntervalKind k = invariantInterval(a, b).kind;
    EXPECT_EQ(causallyConnected(a, b), k != IntervalKind::Spacelike);
  }
}
