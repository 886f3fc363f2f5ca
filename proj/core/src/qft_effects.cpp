#include "relsat/qft_effects.hpp"

#include <cmath>
#include <complex>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

void DetectorPair::validate() const {
  if (!(separation > 0.0) || !(interactionTime > 0.0)) {
    throw DomainError("DetectorPair: separation and interaction time must be positive");
  }
}

void EventOperatorModel::validate() const {
  if (!(detectorResolution > 0.0)) {
    throw DomainError("EventOperatorModel: detector resolution must be positive");
  }
  if (!(maxCorrelation > 0.0 && maxCorrelation <= 1.0)) {
    throw DomainError("EventOperatorModel: C_max must lie in (0, 1]");
  }
}

double unruhTemperature(double acceleration) {
  if (acceleration < 0.0) throw DomainError("Unruh: acceleration must be non-negative");
  return Constants::hbar * acceleration / (kTwoPi * Constants::c * Constants::kB);
}

double unruhAccelerationForTemperature(double temperature) {
  if (temperature < 0.0) throw DomainError("Unruh: temperature must be non-negative");
  return kTwoPi * Constants::c * Constants::kB * temperature / Constants::hbar;
}

double requiredAcceleration(double angularFrequency) {
  if (angularFrequency < 0.0) throw DomainError("frequency must be non-negative");
  return angularFrequency * Constants::c;
}

double berryMixingParameter(double angularFrequency, double acceleration, BerryMixing mixing) {
  if (acceleration < 0.0) throw DomainError("Berry phase: acceleration must be non-negative");
  if (angularFrequency < 0.0) throw DomainError("Berry phase: frequency must be non-negative");
  if (acceleration == 0.0) return 0.0;
  const double x = std::exp(-kPi * angularFrequency * Constants::c / acceleration);
  if (mixing == BerryMixing::Arctanh) {
    if (x >= 1.0) throw DomainError("Berry phase: artanh argument reaches 1 (omega = 0)");
    return std::atanh(x);
  }
  return std::atan(x);
}

double berryPhaseDifference(double angularFrequency, double acceleration, double couplingG,
                            BerryMixing mixing) {
  if (!std::isfinite(couplingG)) throw DomainError("Berry phase: G must be finite");
  const double q = berryMixingParameter(angularFrequency, acceleration, mixing);
  // Reduce G first so that integer G gives exactly zero.
  const double frac = couplingG - std::floor(couplingG);
  const std::complex<double> phase =
      frac == 0.0 ? std::complex<double>(1.0, 0.0) : std::polar(1.0, kTwoPi * frac);
  const double ch = std::cosh(q);
  const double sh = std::sinh(q);
  return std::arg(ch * ch - phase * (sh * sh));
}

double negativityBound(const DetectorPair& pair) {
  pair.validate();
  const double x = pair.separation / (Constants::c * pair.interactionTime);
  return std::exp(-x * x * x);
}

double spacelikeWindow(double separation) {
  if (separation < 0.0) throw DomainError("separation must be non-negative");
  return separation / Constants::c;
}

double ralphCorrelation(const EventOperatorModel& model, double properTimeDifference) {
  model.validate();
  const double r = properTimeDifference / (2.0 * model.detectorResolution);
  return model.maxCorrelation * std::exp(-r * r);
}

double properTimeDifferential(double potentialLow, double potentialHigh, double overlapTime) {
  if (overlapTime < 0.0) throw DomainError("overlap time must be non-negative");
  return ((potentialHigh - potentialLow) / (Constants::c * Constants::c)) * overlapTime;
}

double effectiveOverlapTime(double overlapTime, bool retroreflector) {
  if (overlapTime < 0.0) throw DomainError("overlap time must be non-negative");
  return retroreflector ? 2.0 * overlapTime : overlapTime;
}

}  // namespace relsat
