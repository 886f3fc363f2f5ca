#include "relsat/kinematics.hpp"

#include <cmath>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

Event::Event(double time, const Vec3& position) : t(time), x(position) {
  if (!std::isfinite(time) || !position.allFinite()) {
    throw DomainError("Event: non-finite coordinates");
  }
}

Event::Event(double time, double x1, double y, double z) : Event(time, Vec3(x1, y, z)) {}

Vec4 Event::fourVector() const { return {Constants::c * t, x.x(), x.y(), x.z()}; }

Event Event::fromFourVector(const Vec4& ctx) {
  return Event(ctx(0) / Constants::c, ctx.tail<3>());
}

IntervalResult invariantInterval(const Event& e1, const Event& e2) {
  const double cdt = Constants::c * (e2.t - e1.t);
  const double dx2 = (e2.x - e1.x).squaredNorm();
  const double cdt2 = cdt * cdt;
  const double s2 = dx2 - cdt2;
  if (std::abs(s2) <= kLightlikeTolerance * std::max(dx2, cdt2)) {
    return {IntervalKind::Lightlike, 0.0};
  }
  if (s2 > 0.0) return {IntervalKind::Spacelike, std::sqrt(s2)};
  return {IntervalKind::Timelike, std::sqrt(-s2) / Constants::c};
}

SimultaneityFrame simultaneityBoostSpeed(const Event& e1, const Event& e2) {
  const IntervalResult interval = invariantInterval(e1, e2);
  if (interval.kind != IntervalKind::Spacelike) {
    throw DomainError("simultaneityBoostSpeed: events are not spacelike separated");
  }
  const Vec3 dx = e2.x - e1.x;
  const double dist = dx.norm();
  const double beta = std::abs(Constants::c * (e2.t - e1.t)) / dist;
  // Move along the separation towards the later event.
  const Vec3 axis = (e2.t >= e1.t ? dx : -dx) / dist;
  return {beta, 1.0 / std::sqrt(1.0 - beta * beta), axis};
}

Event toMovingFrame(const Event& e, const Vec3& beta) {
  return Event::fromFourVector(LorentzMatrix::boost(-beta) * e.fourVector());
}

double timingShiftPerDistance(double relativeSpeed) {
  if (relativeSpeed < 0.0) throw DomainError("relative speed must be non-negative");
  if (!(relativeSpeed < Constants::c)) throw DomainError("relative speed must be below c");
  return relativeSpeed / (Constants::c * Constants::c);
}

double minSeparationForSwitching(double relativeSpeed, double switchTime) {
  if (!(relativeSpeed > 0.0)) throw DomainError("relative speed must be positive");
  if (!(relativeSpeed < Constants::c)) throw DomainError("relative speed must be below c");
  if (switchTime < 0.0) throw DomainError("switching time must be non-negative");
  return switchTime * Constants::c * Constants::c / relativeSpeed;
}

double lightTravelTime(double distance) {
  if (distance < 0.0) throw DomainError("distance must be non-negative");
  return distance / Constants::c;
}

bool causallyConnected(const Event& e1, const Event& e2, double speedFactor) {
  if (!(speedFactor >= 1.0)) throw DomainError("speed factor must be >= 1");
  const double dx = (e2.x - e1.x).norm();
  const double reach = speedFactor * Constants::c * std::abs(e2.t - e1.t);
  if (speedFactor == 1.0) {
    // Same lightlike tolerance as invariantInterval so the two agree.
    return invariantInterval(e1, e2).kind != IntervalKind::Spacelike;
  }
  return dx <= reach;
}

}  // namespace relsat
