#pragma once

#include <numbers>
#include <string>
#include <string_view>

namespace relsat {

/// Physical constants in SI. G is CODATA 2018; the others are exact SI definitions.
struct Constants {
  static constexpr double c = 299792458.0;            // m/s
  static constexpr double G = 6.67430e-11;            // m^3/(kg s^2)
  static constexpr double h = 6.62607015e-34;         // J s
  static constexpr double hbar = h / (2.0 * std::numbers::pi);
  static constexpr double kB = 1.380649e-23;          // J/K
  static constexpr double g0 = 9.81;                  // m/s^2
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Earth model used by the orbit and gravitomagnetic calculations.
///
/// Mass and angular momentum default to the cgs figures M = 5.98e27 g and
/// J = 5.86e40 cm^2 g/s, converted to SI. `mu` is always G * mass.
struct EarthParams {
  double mass;             // kg
  double angularMomentum;  // kg m^2/s
  double mu;               // m^3/s^2
  double radius;           // equatorial radius, m
  double meanRadius;       // volumetric mean radius, m
  double rotationRate;     // sidereal, rad/s

  static EarthParams standard();
  static EarthParams fromCgs(double massGrams, double angularMomentumCgs,
                             double radiusMeters, double meanRadiusMeters,
                             double rotationRate);
};

/// Multiply by 1e-7: cm^2 g/s -> kg m^2/s.
double cgsAngularMomentumToSI(double cgs);

enum class AngleUnit { Radian, Degree, Arcsecond, MilliArcsecond };

AngleUnit parseAngleUnit(std::string_view tag);  // throws ConfigError
std::string_view angleUnitSymbol(AngleUnit unit);

double convertAngle(double radians, AngleUnit target);
double convertAngle(double radians, std::string_view targetTag);
double toRadians(double value, AngleUnit from);

/// Dimension tags for the handful of quantities the toolkit reports.
enum class Unit {
  Dimensionless,
  Count,
  Meter,
  Second,
  Radian,
  MilliArcsecond,
  Kelvin,
  MeterPerSecond,
  MeterPerSecondSquared,
  SecondPerMeter,
  Hertz,
  RadianPerSecond,
  JoulePerKilogram,
  InverseSecondSquared,
  SecondSquared,
  SecondPerJoule,
};

std::string_view unitSymbol(Unit unit);

/// A value tagged with its unit. Adding or comparing across tags throws.
class Quantity {
 public:
  constexpr Quantity(double value, Unit unit) : value_(value), unit_(unit) {}

  constexpr double value() const { return value_; }
  constexpr Unit unit() const { return unit_; }

  Quantity operator+(const Quantity& other) const;
  Quantity operator-(const Quantity& other) const;
  Quantity operator*(double scale) const { return {value_ * scale, unit_}; }
  Quantity operator/(double scale) const { return {value_ / scale, unit_}; }
  Quantity operator-() const { return {-value_, unit_}; }
  bool operator<(const Quantity& other) const;
  bool operator==(const Quantity& other) const;

 private:
  double value_;
  Unit unit_;
};

}  // namespace relsat
