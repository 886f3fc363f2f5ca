#include "relsat/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>

#include "relsat/bell_stats.hpp"
#include "relsat/config_file.hpp"
#include "relsat/csv.hpp"
#include "relsat/gravitomagnetism.hpp"
#include "relsat/interferometry.hpp"
#include "relsat/kinematics.hpp"
#include "relsat/polarization_diffusion.hpp"
#include "relsat/qft_effects.hpp"
#include "relsat/wigner.hpp"

namespace relsat {

namespace {

#include "effect_refs.inc"

const std::map<std::string, std::string>& catalogue() {
  static const std::map<std::string, std::string> refs = [] {
    std::map<std::string, std::string> out;
    const ConfigFile cfg = ConfigFile::parseString(kEffectRefs, "effect_refs");
    for (const ConfigEntry& e : cfg.entries()) out.emplace(e.key, e.value);
    return out;
  }();
  return refs;
}

class Builder {
 public:
  void add(const std::string& effect, Unit unit, const std::function<double()>& compute) {
    double value = 0.0;
    try {
      value = compute();
    } catch (const EffectError&) {
      throw;
    } catch (const std::exception& e) {
      throw EffectError(effect, e.what());
    }
    if (!std::isfinite(value)) throw EffectError(effect, "non-finite result");
    report_.entries.push_back({effect, value, unit, effectReference(effect)});
  }

  EffectReport take() { return std::move(report_); }

 private:
  EffectReport report_;
};

}  // namespace

const EffectEntry* EffectReport::find(const std::string& effect) const {
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const EffectEntry& e) { return e.effect == effect; });
  return it == entries.end() ? nullptr : &*it;
}

const std::string& effectReference(const std::string& effect) {
  static const std::string empty;
  const auto& refs = catalogue();
  const auto it = refs.find(effect);
  return it == refs.end() ? empty : it->second;
}

std::vector<std::string> catalogedEffects() {
  std::vector<std::string> out;
  for (const auto& [k, v] : catalogue()) out.push_back(k);
  return out;
}

EffectReport runReport(const Scenario& s) {
  s.validate();
  Builder b;
  const OrbitPreset orbit = s.resolvedOrbit();
  const double linkRange = orbit.linkRange;
  const double altitude = s.geometry.linkAltitude.value_or(linkRange);
  const EarthParams earth = EarthParams::standard();

  // Geometry group.
  // Photons leave a source at the origin at t = 0. One is held in memory at the
  // origin and detected at t1; the other is detected on arrival at X1.
  const Event origin(s.geometry.memoryDelay, 0.0);
  const Event remote(s.geometry.separation / Constants::c, s.geometry.separation);
  const IntervalResult interval = invariantInterval(origin, remote);
  if (interval.kind == IntervalKind::Spacelike) {
    b.add("invariant_separation", Unit::Meter, [&] { return interval.magnitude; });
    b.add("simultaneity_boost_beta", Unit::Dimensionless,
          [&] { return simultaneityBoostSpeed(origin, remote).beta; });
  }
  b.add("causally_connected", Unit::Dimensionless, [&] {
    return causallyConnected(origin, remote, s.geometry.speedFactor) ? 1.0 : 0.0;
  });
  b.add("timing_shift_per_distance", Unit::SecondPerMeter,
        [&] { return timingShiftPerDistance(s.geometry.relativeSpeed); });
  if (s.geometry.relativeSpeed > 0.0) {
    b.add("min_separation_for_switching", Unit::Meter,
          [&] { return minSeparationForSwitching(s.geometry.relativeSpeed, s.switchTime); });
  }
  b.add("timing_shift_over_link", Unit::Second, [&] {
    return timingShiftPerDistance(s.geometry.relativeSpeed) * s.geometry.linkDistance;
  });
  b.add("light_time_window", Unit::Second, [&] { return lightTravelTime(linkRange); });

  double orbitalSpeed = 0.0;
  if (!orbit.fixedRange) {
    const StateVector sat = propagate(orbit.orbit, 0.0);
    orbitalSpeed = sat.velocity.norm();
    b.add("orbital_speed", Unit::MeterPerSecond, [&] { return orbitalSpeed; });
    b.add("orbital_period", Unit::Second, [&] { return orbitalPeriod(orbit.orbit); });
    if (s.stationA) {
      b.add("station_range", Unit::Meter, [&] {
        return relativeGeometry(stationState(*s.stationA, 0.0), sat).range;
      });
    }
  }

  if (s.effects.wigner) {
    b.add("first_order_wigner_phase", Unit::Radian, [&] {
      return firstOrderBoostPhase(s.wigner.theta, s.wigner.phi, s.wigner.thetaB, s.wigner.phiB,
                                  s.wigner.speed.value_or(orbitalSpeed));
    });
  }

  if (s.effects.gravitomagnetic) {
    const SpinningBody body = SpinningBody::earth(earth);
    const double r2 = s.gravitomagnetic.r2.value_or(std::numeric_limits<double>::infinity());
    b.add("kerr_rotation", Unit::MilliArcsecond, [&] {
      return convertAngle(
          kerrPrincipalNullRotation(body, s.gravitomagnetic.r1, r2, s.gravitomagnetic.theta),
          AngleUnit::MilliArcsecond);
    });
    b.add("ground_emission_rotation", Unit::MilliArcsecond, [&] {
      return convertAngle(
          kerrPrincipalNullRotation(body, earth.meanRadius, r2, s.gravitomagnetic.theta),
          AngleUnit::MilliArcsecond);
    });
    b.add("impact_parameter_rotation", Unit::MilliArcsecond, [&] {
      return convertAngle(
          axialImpactRotation(body, s.gravitomagnetic.impactParameter.value_or(earth.meanRadius),
                              true),
          AngleUnit::MilliArcsecond);
    });
  }

  if (s.effects.interferometry) {
    const double fibreLength = s.fibreDelay * Constants::c / s.fibreIndex;
    b.add("optical_cow_phase", Unit::Radian, [&] {
      return opticalCowPhase(OpticalLink{s.wavelength, fibreLength, altitude, Constants::g0});
    });
    b.add("grav_redshift", Unit::Dimensionless, [&] {
      return gravRedshiftTwoPotential(OrbitEarth::mu, OrbitEarth::radius,
                                      OrbitEarth::radius + altitude);
    });
    if (!orbit.fixedRange) {
      b.add("displacement_during_delay", Unit::Meter,
            [&] { return displacementDuringDelay(orbitalSpeed, s.fibreDelay); });
    }
  }

  if (s.effects.qft) {
    b.add("unruh_temperature", Unit::Kelvin, [&] { return unruhTemperature(s.qft.acceleration); });
    b.add("required_acceleration", Unit::MeterPerSecondSquared,
          [&] { return requiredAcceleration(s.qft.modeFrequency); });
    b.add("berry_phase_difference", Unit::Radian, [&] {
      return berryPhaseDifference(s.qft.modeFrequency, s.qft.acceleration, s.qft.berryG);
    });
    b.add("spacelike_window", Unit::Second, [&] { return spacelikeWindow(linkRange); });
    b.add("negativity_bound", Unit::Dimensionless, [&] {
      const double t = s.qft.interactionTime.value_or(spacelikeWindow(linkRange));
      return negativityBound(DetectorPair{linkRange, t, s.qft.modeFrequency});
    });
    const auto delta = [&] {
      return properTimeDifferential(
          newtonianPotential(OrbitEarth::radius),
          newtonianPotential(OrbitEarth::radius + altitude),
          effectiveOverlapTime(s.qft.overlapTime, s.qft.retroreflector));
    };
    b.add("ralph_proper_time_difference", Unit::Second, delta);
    b.add("ralph_correlation", Unit::Dimensionless, [&] {
      return ralphCorrelation(EventOperatorModel{s.detectorResolution, 1.0}, delta());
    });
  }

  if (s.effects.diffusion) {
    const CmbEpoch cmb;
    const double dBound = driftBound(cmb.chiBound, cmb.time, cmb.frequency);
    const double cBound = diffusionBound(cmb.muBound, cmb.time, cmb.frequency);
    b.add("cmb_drift_bound", Unit::InverseSecondSquared, [&] { return dBound; });
    b.add("cmb_diffusion_bound", Unit::InverseSecondSquared, [&] { return cBound; });
    const double t = s.diffusion.travelTime.value_or(lightTravelTime(linkRange));
    b.add("angle_shift_forecast", Unit::Dimensionless, [&] {
      return angleShift(t, s.diffusion.frequency, s.diffusion.dDrift.value_or(dBound));
    });
    b.add("polarization_decay_forecast", Unit::Dimensionless, [&] {
      return polarizationDecay(t, s.diffusion.frequency, s.diffusion.cDiff.value_or(cBound));
    });
  }

  if (s.effects.bell) {
    b.add("required_photons", Unit::Count,
          [&] { return static_cast<double>(requiredPhotons(s.visibility)); });
    const std::uint64_t pairs =
        s.photonBudget > 0 ? s.photonBudget : requiredPhotons(s.visibility);
    const ChshSettings settings = standardChshSettings();
    b.add("bell_mc_seed", Unit::Count, [&] { return static_cast<double>(s.seed); });
    b.add("bell_mc_pairs", Unit::Count, [&] { return static_cast<double>(pairs); });
    ChshResult chsh;
    b.add("bell_mc_s_value", Unit::Dimensionless, [&] {
      chsh = chshEstimate(
          simulateCoincidences(s.visibility, pairs, settings, s.seed, s.workers), settings);
      return chsh.sValue;
    });
    b.add("bell_mc_sigma_violation", Unit::Dimensionless, [&] { return chsh.nSigmaViolation; });
  }

  return b.take();
}

void writeReportCsv(std::ostream& os, const EffectReport& report) {
  CsvWriter csv(os);
  csv.row("effect", "value", "unit", "paper_ref");
  for (const EffectEntry& e : report.entries) {
    csv.row(e.effect, e.value, unitSymbol(e.unit), e.paperRef);
  }
}

void writeReportTable(std::ostream& os, const EffectReport& report) {
  std::size_t wEffect = 6, wValue = 5, wUnit = 4;
  std::vector<std::string> values;
  for (const EffectEntry& e : report.entries) {
    values.push_back(formatReal(e.value));
    wEffect = std::max(wEffect, e.effect.size());
    wValue = std::max(wValue, values.back().size());
    wUnit = std::max(wUnit, unitSymbol(e.unit).size());
  }
  const auto line = [&](std::string_view a, std::string_view v, std::string_view u,
                        std::string_view r) {
    os << std::left << std::setw(static_cast<int>(wEffect)) << a << "  " << std::right
       << std::setw(static_cast<int>(wValue)) << v << "  " << std::left
       << std::setw(static_cast<int>(wUnit)) << u << "  " << r << '\n';
  };
  line("effect", "value", "unit", "reference");
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const EffectEntry& e = report.entries[i];
    line(e.effect, values[i], unitSymbol(e.unit), e.paperRef);
  }
}

}  // namespace relsat
