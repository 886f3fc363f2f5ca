#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relsat/lorentz.hpp"

namespace relsat {

/// Two-body Earth model for orbit work. GM is the geodetic value; the
/// cgs-derived EarthParams mass is reserved for frame-dragging estimates.
struct OrbitEarth {
  static constexpr double mu = 3.986004418e14;         // m^3/s^2
  static constexpr double radius = 6378137.0;          // m
  static constexpr double rotationRate = 7.2921150e-5;  // rad/s
};

struct OrbitSpec {
  double semiMajorAxis = 0.0;  // m
  double eccentricity = 0.0;
  double inclination = 0.0;  // rad
  double raan = 0.0;
  double argPerigee = 0.0;
  double meanAnomalyAtEpoch = 0.0;
  double epoch = 0.0;  // s

  /// Throws DomainError unless 0 <= e < 1 and the perigee clears the surface.
  void validate() const;
  double perigeeAltitude() const;
  double apogeeAltitude() const;
};

struct StateVector {
  Vec3 position = Vec3::Zero();  // ECI, m
  Vec3 velocity = Vec3::Zero();  // m/s
  double time = 0.0;             // s
};

struct GroundStation {
  double latitude = 0.0;   // rad
  double longitude = 0.0;  // rad
  double altitude = 0.0;   // m

  void validate() const;
};

struct RelativeGeometry {
  double range = 0.0;          // m
  double rangeRate = 0.0;      // m/s, positive when separating
  double relativeSpeed = 0.0;  // m/s
};

/// Eccentric anomaly from M = E - e sin E by Newton iteration to |dE| < 1e-12.
/// Throws NumericError after 50 iterations.
double solveKepler(double meanAnomaly, double eccentricity);

StateVector propagate(const OrbitSpec& orbit, double t);
StateVector stationState(const GroundStation& gs, double t);

/// Throws DomainError when the two states are not simultaneous.
RelativeGeometry relativeGeometry(const StateVector& a, const StateVector& b);

double newtonianPotential(double r);
double orbitalPeriod(const OrbitSpec& orbit);
double specificEnergy(const StateVector& s);
Vec3 specificAngularMomentum(const StateVector& s);

/// A named orbit together with the link range used for light-time estimates.
struct OrbitPreset {
  std::string name;
  OrbitSpec orbit;
  /// Zenith range from the surface for Earth orbits, or the fixed distance for
  /// lunar-distance and au.
  double linkRange = 0.0;
  /// True when the preset is only a distance, not an Earth-bound orbit.
  bool fixedRange = false;
};

/// leo500, leo1000, gto, geo, lunar-distance, au. Throws ConfigError otherwise.
OrbitPreset orbitPreset(std::string_view name);
std::vector<std::string> orbitPresetNames();

}  // namespace relsat
