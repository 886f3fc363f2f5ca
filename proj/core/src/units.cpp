#include "relsat/units.hpp"

#include <stdexcept>

#include "relsat/errors.hpp"

namespace relsat {

namespace {

constexpr double kRadToDeg = 180.0 / kPi;

void requireSameUnit(Unit a, Unit b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string("Quantity ") + op + ": unit mismatch (" +
                                std::string(unitSymbol(a)) + " vs " +
                                std::string(unitSymbol(b)) + ")");
  }
}

}  // namespace

EarthParams EarthParams::standard() {
  return fromCgs(5.98e27, 5.86e40, 6378137.0, 6371000.0, 7.2921150e-5);
}

EarthParams EarthParams::fromCgs(double massGrams, double angularMomentumCgs,
                                 double radiusMeters, double meanRadiusMeters,
                                 double rotationRate) {
  if (!(massGrams > 0.0) || !(angularMomentumCgs > 0.0) || !(radiusMeters > 0.0) ||
      !(meanRadiusMeters > 0.0)) {
    throw DomainError("EarthParams: mass, angular momentum and radii must be positive");
  }
  EarthParams p{};
  p.mass = massGrams * 1e-3;
  p.angularMomentum = cgsAngularMomentumToSI(angularMomentumCgs);
  p.mu = Constants::G * p.mass;
  p.radius = radiusMeters;
  p.meanRadius = meanRadiusMeters;
  p.rotationRate = rotationRate;
  return p;
}

double cgsAngularMomentumToSI(double cgs) {
  if (cgs < 0.0) throw DomainError("angular momentum must be non-negative");
  return cgs * 1e-7;
}

AngleUnit parseAngleUnit(std::string_view tag) {
  if (tag == "rad") return AngleUnit::Radian;
  if (tag == "deg") return AngleUnit::Degree;
  if (tag == "arcsec") return AngleUnit::Arcsecond;
  if (tag == "mas" || tag == "arcmsec") return AngleUnit::MilliArcsecond;
  throw ConfigError("unknown angle unit '" + std::string(tag) + "'");
}

std::string_view angleUnitSymbol(AngleUnit unit) {
  switch (unit) {
    case AngleUnit::Radian: return "rad";
    case AngleUnit::Degree: return "deg";
    case AngleUnit::Arcsecond: return "arcsec";
    case AngleUnit::MilliArcsecond: return "mas";
  }
  return "?";
}

double convertAngle(double radians, AngleUnit target) {
  switch (target) {
    case AngleUnit::Radian: return radians;
    case AngleUnit::Degree: return radians * kRadToDeg;
    case AngleUnit::Arcsecond: return radians * kRadToDeg * 3600.0;
    case AngleUnit::MilliArcsecond: return radians * kRadToDeg * 3600.0 * 1000.0;
  }
  throw ConfigError("unknown angle unit");
}

double convertAngle(double radians, std::string_view targetTag) {
  return convertAngle(radians, parseAngleUnit(targetTag));
}

double toRadians(double value, AngleUnit from) {
  switch (from) {
    case AngleUnit::Radian: return value;
    case AngleUnit::Degree: return value / kRadToDeg;
    case AngleUnit::Arcsecond: return value / (kRadToDeg * 3600.0);
    case AngleUnit::MilliArcsecond: return value / (kRadToDeg * 3600.0 * 1000.0);
  }
  throw ConfigError("unknown angle unit");
}

std::string_view unitSymbol(Unit unit) {
  switch (unit) {
    case Unit::Dimensionless: return "1";
    case Unit::Count: return "count";
    case Unit::Meter: return "m";
    case Unit::Second: return "s";
    case Unit::Radian: return "rad";
    case Unit::MilliArcsecond: return "mas";
    case Unit::Kelvin: return "K";
    case Unit::MeterPerSecond: return "m/s";
    case Unit::MeterPerSecondSquared: return "m/s^2";
    case Unit::SecondPerMeter: return "s/m";
    case Unit::Hertz: return "Hz";
    case Unit::RadianPerSecond: return "rad/s";
    case Unit::JoulePerKilogram: return "J/kg";
    case Unit::InverseSecondSquared: return "s^-2";
    case Unit::SecondSquared: return "s^2";
    case Unit::SecondPerJoule: return "s/J";
  }
  return "?";
}

Quantity Quantity::operator+(const Quantity& other) const {
  requireSameUnit(unit_, other.unit_, "+");
  return {value_ + other.value_, unit_};
}

Quantity Quantity::operator-(const Quantity& other) const {
  requireSameUnit(unit_, other.unit_, "-");
  return {value_ - other.value_, unit_};
}

bool Quantity::operator<(const Quantity& other) const {
  requireSameUnit(unit_, other.unit_, "<");
  return value_ < other.value_;
}

bool Quantity::operator==(const Quantity& other) const {
  requireSameUnit(unit_, other.unit_, "==");
  return value_ == other.value_;
}

}  // namespace relsat
