#include "relsat/interferometry.hpp"

#include <cmath>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

NeutronBeam::NeutronBeam(double mass, double wavelength) : mass_(mass), wavelength_(wavelength) {
  if (!(mass > 0.0) || !(wavelength > 0.0)) {
    throw DomainError("NeutronBeam: mass and wavelength must be positive");
  }
}

double NeutronBeam::speed() const { return Constants::h / (mass_ * wavelength_); }

void OpticalLink::validate() const {
  if (!(wavelength > 0.0) || !(fibreLength >= 0.0) || !(altitude >= 0.0) ||
      !std::isfinite(surfaceGravity)) {
    throw DomainError("OpticalLink: wavelength must be positive, lengths non-negative");
  }
}

double cowNeutronPhase(const NeutronBeam& beam, double area, double tilt, double g) {
  if (area < 0.0) throw DomainError("COW phase: area must be non-negative");
  const double m = beam.mass();
  return -beam.wavelength() * m * m * g * area * std::sin(tilt) /
         (kTwoPi * Constants::hbar * Constants::hbar);
}

double cowNeutronPhaseVelocityForm(const NeutronBeam& beam, double area, double tilt,
                                   double g) {
  if (area < 0.0) throw DomainError("COW phase: area must be non-negative");
  const double v = beam.speed();
  return -kTwoPi * g * area * std::sin(tilt) / (beam.wavelength() * v * v);
}

double gravRedshiftWeakField(double altitude, double g) {
  if (altitude < 0.0) throw DomainError("redshift: altitude must be non-negative");
  return g * altitude / (Constants::c * Constants::c);
}

double gravRedshiftTwoPotential(double mu, double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw DomainError("redshift: radii must be positive");
  return mu * (1.0 / r1 - 1.0 / r2) / (Constants::c * Constants::c);
}

double opticalCowPhase(const OpticalLink& link) {
  link.validate();
  return (kTwoPi * link.fibreLength / link.wavelength) *
         gravRedshiftWeakField(link.altitude, link.surfaceGravity);
}

double fibreDelay(double fibreLength, double groupIndex) {
  if (fibreLength < 0.0) throw DomainError("fibre length must be non-negative");
  if (!(groupIndex >= 1.0)) throw DomainError("group index must be >= 1");
  return groupIndex * fibreLength / Constants::c;
}

double displacementDuringDelay(double satelliteSpeed, double delay) {
  if (satelliteSpeed < 0.0 || delay < 0.0) {
    throw DomainError("displacement: speed and delay must be non-negative");
  }
  return satelliteSpeed * delay;
}

}  // namespace relsat
