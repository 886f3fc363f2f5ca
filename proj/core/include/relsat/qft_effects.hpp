#pragma once

namespace relsat {

/// Two detectors at fixed separation coupled to the field for a time T.
struct DetectorPair {
  double separation;       // R, m
  double interactionTime;  // T, s
  double gapFrequency;     // rad/s (informational; the bound does not use it)

  void validate() const;
};

/// Detector resolution d_t and flat-spacetime correlation C_max of the
/// event-operator decorrelation model.
struct EventOperatorModel {
  double detectorResolution;  // s
  double maxCorrelation = 1.0;

  void validate() const;
};

/// T = hbar a / (2 pi c kB).
double unruhTemperature(double acceleration);
/// Inverse of unruhTemperature.
double unruhAccelerationForTemperature(double temperature);

/// a = omega c, with omega in rad/s.
double requiredAcceleration(double angularFrequency);

enum class BerryMixing {
  Arctan,   // q = arctan(exp(-pi omega c / a)), the printed form (default)
  Arctanh,  // q = artanh(exp(-pi omega c / a)), squeezing-parameter form
};

/// arg(cosh^2 q - exp(2 pi i G) sinh^2 q); 1-periodic in G, and exactly 0
/// for integer G or a = 0.
double berryPhaseDifference(double angularFrequency, double acceleration, double couplingG,
                            BerryMixing mixing = BerryMixing::Arctan);
double berryMixingParameter(double angularFrequency, double acceleration,
                            BerryMixing mixing = BerryMixing::Arctan);

/// Lower bound exp(-(R/(cT))^3) on the extracted vacuum negativity.
double negativityBound(const DetectorPair& pair);

/// Longest interaction time that keeps detectors R apart spacelike: R/c.
double spacelikeWindow(double separation);

/// C = C_max exp(-delta^2 / (4 d_t^2)).
double ralphCorrelation(const EventOperatorModel& model, double properTimeDifference);

/// ((phiHigh - phiLow)/c^2) * overlapTime, Newtonian potentials in J/kg.
double properTimeDifferential(double potentialLow, double potentialHigh, double overlapTime);

/// A retroreflected link doubles the time the photons spend at altitude.
double effectiveOverlapTime(double overlapTime, bool retroreflector);

}  // namespace relsat
