#pragma once

#include "relsat/lorentz.hpp"

namespace relsat {

/// Spacetime event in SI units (Earth-frame inertial approximation).
struct Event {
  double t = 0.0;  // s
  Vec3 x = Vec3::Zero();  // m

  Event() = default;
  Event(double time, const Vec3& position);
  Event(double time, double x1, double y = 0.0, double z = 0.0);

  /// (ct, x, y, z) in meters.
  Vec4 fourVector() const;
  static Event fromFourVector(const Vec4& ctx);
};

enum class IntervalKind { Spacelike, Timelike, Lightlike };

struct IntervalResult {
  IntervalKind kind;
  /// Proper distance (m) when spacelike, proper time (s) when timelike, 0 when lightlike.
  double magnitude;
};

/// Relative tolerance below which (dx)^2 - (c dt)^2 counts as zero.
inline constexpr double kLightlikeTolerance = 1e-12;

IntervalResult invariantInterval(const Event& e1, const Event& e2);

struct SimultaneityFrame {
  double beta;   // v/c of the frame in which the two events are simultaneous
  double gamma;  // 1/sqrt(1 - beta^2)
  Vec3 axis;     // unit vector along the spatial separation e2 - e1
};

/// Frame speed (along the separation axis) that makes a spacelike pair simultaneous.
/// Throws DomainError for timelike or lightlike pairs.
SimultaneityFrame simultaneityBoostSpeed(const Event& e1, const Event& e2);

/// Coordinates of `e` in a frame moving with velocity beta*c relative to the original.
Event toMovingFrame(const Event& e, const Vec3& beta);

/// Simultaneity shift per unit separation, v0/c^2 (s/m).
double timingShiftPerDistance(double relativeSpeed);

/// Separation (m) at which the simultaneity shift equals `switchTime`.
double minSeparationForSwitching(double relativeSpeed, double switchTime);

double lightTravelTime(double distance);

/// True iff |dx| <= kappa * c * |dt|. kappa = 1 is the ordinary light cone;
/// kappa > 1 models signals faster than light.
bool causallyConnected(const Event& e1, const Event& e2, double speedFactor = 1.0);

}  // namespace relsat
