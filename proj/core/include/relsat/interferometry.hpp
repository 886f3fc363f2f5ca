#pragma once

namespace relsat {

/// Neutron (or other massive particle) beam; speed follows from de Broglie.
class NeutronBeam {
 public:
  static constexpr double kNeutronMass = 1.67492749804e-27;  // kg

  NeutronBeam(double mass, double wavelength);
  static NeutronBeam thermal(double wavelength) { return {kNeutronMass, wavelength}; }

  double mass() const { return mass_; }
  double wavelength() const { return wavelength_; }
  double speed() const;  // h / (m lambda)

 private:
  double mass_;
  double wavelength_;
};

/// Ground-to-satellite optical interferometer with a fibre delay line.
struct OpticalLink {
  double wavelength;      // m
  double fibreLength;     // m
  double altitude;        // m
  double surfaceGravity;  // m/s^2

  void validate() const;
};

/// Gravitational phase between the sub-beams, -lambda m^2 g A sin(alpha) / (2 pi hbar^2).
double cowNeutronPhase(const NeutronBeam& beam, double area, double tilt, double g);

/// Same phase in velocity form, -2 pi g A sin(alpha) / (lambda v^2).
double cowNeutronPhaseVelocityForm(const NeutronBeam& beam, double area, double tilt,
                                   double g);

/// Weak-field fractional frequency shift g h / c^2.
double gravRedshiftWeakField(double altitude, double g);

/// Two-potential fractional shift mu (1/r1 - 1/r2) / c^2.
double gravRedshiftTwoPotential(double mu, double r1, double r2);

/// (2 pi l / lambda) (g h / c^2).
double opticalCowPhase(const OpticalLink& link);

/// Delay through the fibre at group index n. The default n = 1 reproduces the
/// customary "6 km ~ 20 us" figure; silica fibre is closer to n = 1.47.
double fibreDelay(double fibreLength, double groupIndex = 1.0);

double displacementDuringDelay(double satelliteSpeed, double delay);

}  // namespace relsat
