#include "relsat/orbits.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

namespace {

constexpr double kSimultaneityTolerance = 1e-9;  // s

double degrees(double d) { return d * kPi / 180.0; }

OrbitSpec circular(double radius, double inclinationDeg) {
  OrbitSpec o;
  o.semiMajorAxis = radius;
  o.inclination = degrees(inclinationDeg);
  return o;
}

}  // namespace

void OrbitSpec::validate() const {
  if (!std::isfinite(semiMajorAxis) || !(semiMajorAxis > 0.0)) {
    throw DomainError("OrbitSpec: semi-major axis must be positive");
  }
  if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
    throw DomainError("OrbitSpec: eccentricity must lie in [0, 1)");
  }
  if (!std::isfinite(inclination) || !std::isfinite(raan) || !std::isfinite(argPerigee) ||
      !std::isfinite(meanAnomalyAtEpoch) || !std::isfinite(epoch)) {
    throw DomainError("OrbitSpec: angles and epoch must be finite");
  }
  if (!(perigeeAltitude() > 0.0)) {
    throw DomainError("OrbitSpec: perigee lies below the Earth's surface");
  }
}

double OrbitSpec::perigeeAltitude() const {
  return semiMajorAxis * (1.0 - eccentricity) - OrbitEarth::radius;
}

double OrbitSpec::apogeeAltitude() const {
  return semiMajorAxis * (1.0 + eccentricity) - OrbitEarth::radius;
}

void GroundStation::validate() const {
  if (!(std::abs(latitude) <= kPi / 2.0)) {
    throw DomainError("GroundStation: |latitude| must not exceed pi/2");
  }
  if (!std::isfinite(longitude) || !std::isfinite(altitude)) {
    throw DomainError("GroundStation: longitude and altitude must be finite");
  }
}

double solveKepler(double meanAnomaly, double e) {
  if (!(e >= 0.0 && e < 1.0)) throw DomainError("solveKepler: eccentricity must lie in [0, 1)");
  const double m = std::remainder(meanAnomaly, kTwoPi);
  double ecc = e < 0.8 ? m : (m >= 0.0 ? kPi : -kPi);
  for (int i = 0; i < 50; ++i) {
    const double step = (ecc - e * std::sin(ecc) - m) / (1.0 - e * std::cos(ecc));
    ecc -= step;
    if (std::abs(step) < 1e-12) return ecc + (meanAnomaly - m);
  }
  throw NumericError("solveKepler: Newton iteration did not converge in 50 steps");
}

StateVector propagate(const OrbitSpec& orbit, double t) {
  orbit.validate();
  const double a = orbit.semiMajorAxis;
  const double e = orbit.eccentricity;
  const double n = std::sqrt(OrbitEarth::mu / (a * a * a));
  const double ecc = solveKepler(orbit.meanAnomalyAtEpoch + n * (t - orbit.epoch), e);

  const double cosE = std::cos(ecc), sinE = std::sin(ecc);
  const double b = a * std::sqrt(1.0 - e * e);
  const double r = a * (1.0 - e * cosE);
  const Vec3 posPf(a * (cosE - e), b * sinE, 0.0);
  const double eDot = n * a / r;
  const Vec3 velPf(-a * sinE * eDot, b * cosE * eDot, 0.0);

  const Mat3 rot = (Eigen::AngleAxisd(orbit.raan, Vec3::UnitZ()) *
                    Eigen::AngleAxisd(orbit.inclination, Vec3::UnitX()) *
                    Eigen::AngleAxisd(orbit.argPerigee, Vec3::UnitZ()))
                       .toRotationMatrix();
  return StateVector{rot * posPf, rot * velPf, t};
}

StateVector stationState(const GroundStation& gs, double t) {
  gs.validate();
  const double r = OrbitEarth::radius + gs.altitude;
  const double lon = gs.longitude + OrbitEarth::rotationRate * t;
  const Vec3 pos(r * std::cos(gs.latitude) * std::cos(lon),
                 r * std::cos(gs.latitude) * std::sin(lon), r * std::sin(gs.latitude));
  const Vec3 omega(0.0, 0.0, OrbitEarth::rotationRate);
  return StateVector{pos, omega.cross(pos), t};
}

RelativeGeometry relativeGeometry(const StateVector& a, const StateVector& b) {
  if (std::abs(a.time - b.time) > kSimultaneityTolerance) {
    throw DomainError("relativeGeometry: states are not simultaneous");
  }
  const Vec3 dr = b.position - a.position;
  const Vec3 dv = b.velocity - a.velocity;
  RelativeGeometry g;
  g.range = dr.norm();
  g.rangeRate = g.range > 0.0 ? dr.dot(dv) / g.range : 0.0;
  g.relativeSpeed = dv.norm();
  return g;
}

double newtonianPotential(double r) {
  if (!(r > 0.0)) throw DomainError("newtonianPotential: r must be positive");
  return -OrbitEarth::mu / r;
}

double orbitalPeriod(const OrbitSpec& orbit) {
  orbit.validate();
  const double a = orbit.semiMajorAxis;
  return kTwoPi * std::sqrt(a * a * a / OrbitEarth::mu);
}

double specificEnergy(const StateVector& s) {
  return 0.5 * s.velocity.squaredNorm() - OrbitEarth::mu / s.position.norm();
}

Vec3 specificAngularMomentum(const StateVector& s) { return s.position.cross(s.velocity); }

OrbitPreset orbitPreset(std::string_view name) {
  const double re = OrbitEarth::radius;
  OrbitPreset p;
  p.name = std::string(name);
  if (name == "leo500") {
    p.orbit = circular(re + 500e3, 51.6);
  } else if (name == "leo1000") {
    p.orbit = circular(re + 1000e3, 99.5);
  } else if (name == "gto") {
    const double rp = re + 250e3, ra = re + 35786e3;
    p.orbit.semiMajorAxis = 0.5 * (rp + ra);
    p.orbit.eccentricity = (ra - rp) / (ra + rp);
    p.orbit.inclination = degrees(27.0);
    p.orbit.argPerigee = degrees(178.0);
  } else if (name == "geo") {
    p.orbit = circular(42164e3, 0.0);
  } else if (name == "lunar-distance") {
    p.orbit = circular(3.84e8, 0.0);
    p.linkRange = 3.84e8;
    p.fixedRange = true;
    return p;
  } else if (name == "au") {
    p.orbit = circular(1.496e11, 0.0);
    p.linkRange = 1.496e11;
    p.fixedRange = true;
    return p;
  } else {
    throw ConfigError("unknown orbit preset '" + std::string(name) + "'");
  }
  p.linkRange = p.orbit.apogeeAltitude();
  return p;
}

std::vector<std::string> orbitPresetNames() {
  return {"leo500", "leo1000", "gto", "geo", "lunar-distance", "au"};
}

}  // namespace relsat
