#include "relsat/scenario.hpp"

#include <cmath>
#include <sstream>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

namespace {

[[noreturn]] void invalid(std::string_view field, std::string_view why) {
  throw ConfigError("invalid value for '" + std::string(field) + "': " + std::string(why));
}

void requirePositive(std::string_view field, double v) {
  if (!(std::isfinite(v) && v > 0.0)) invalid(field, "must be positive");
}

void requireNonNegative(std::string_view field, double v) {
  if (!(std::isfinite(v) && v >= 0.0)) invalid(field, "must be non-negative");
}

double deg(double d) { return d * kPi / 180.0; }

// Reads an optional value, checking it against `check` so the error carries the
// file position as well as the field name.
class Reader {
 public:
  explicit Reader(const ConfigFile& cfg) : cfg_(cfg) {}

  template <typename Check>
  void real(std::string_view section, std::string_view key, double& out, Check check) const {
    if (auto v = cfg_.getReal(section, key)) {
      guard(section, key, [&] { check(key, *v); });
      out = *v;
    }
  }

  template <typename Check>
  void real(std::string_view section, std::string_view key, std::optional<double>& out,
            Check check) const {
    double v = 0.0;
    bool seen = false;
    real(section, key, v, [&](std::string_view k, double x) {
      check(k, x);
      seen = true;
    });
    if (seen) out = v;
  }

  void angle(std::string_view section, std::string_view key, double& out) const {
    double d = 0.0;
    bool seen = false;
    real(section, key, d, [&](std::string_view, double) { seen = true; });
    if (seen) out = deg(d);
  }

  void flag(std::string_view section, std::string_view key, bool& out) const {
    if (auto v = cfg_.getBool(section, key)) out = *v;
  }

  template <typename Fn>
  void guard(std::string_view section, std::string_view key, Fn fn) const {
    try {
      fn();
    } catch (const ConfigError& e) {
      cfg_.fail(*cfg_.find(section, key), e.what());
    }
  }

  const ConfigFile& cfg() const { return cfg_; }

 private:
  const ConfigFile& cfg_;
};

const auto positive = [](std::string_view k, double v) { requirePositive(k, v); };
const auto nonNegative = [](std::string_view k, double v) { requireNonNegative(k, v); };
const auto any = [](std::string_view, double) {};

std::optional<GroundStation> readStation(const Reader& r, std::string_view section) {
  if (!r.cfg().hasSection(section)) return std::nullopt;
  GroundStation gs;
  r.angle(section, "latitude", gs.latitude);
  r.angle(section, "longitude", gs.longitude);
  r.real(section, "altitude", gs.altitude, any);
  r.guard(section, "latitude", [&] {
    if (!(std::abs(gs.latitude) <= kPi / 2.0)) invalid("latitude", "must lie in [-90, 90]");
  });
  return gs;
}

}  // namespace

std::vector<std::string> EffectFlags::groupNames() {
  return {"wigner", "gravitomagnetic", "interferometry", "qft", "diffusion", "bell"};
}

EffectFlags EffectFlags::fromList(std::string_view list) {
  EffectFlags f{false, false, false, false, false, false};
  std::istringstream in{std::string(list)};
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    item = b == std::string::npos ? std::string() : item.substr(b, e - b + 1);
    if (item.empty() || item == "none" || item == "geometry") continue;
    if (item == "all") f = EffectFlags{};
    else if (item == "wigner") f.wigner = true;
    else if (item == "gravitomagnetic") f.gravitomagnetic = true;
    else if (item == "interferometry") f.interferometry = true;
    else if (item == "qft") f.qft = true;
    else if (item == "diffusion") f.diffusion = true;
    else if (item == "bell") f.bell = true;
    else throw ConfigError("unknown effect group '" + item + "'");
  }
  return f;
}

OrbitPreset Scenario::resolvedOrbit() const {
  OrbitPreset p = orbitPreset(preset);
  if (orbit && !p.fixedRange) {
    p.orbit = *orbit;
    p.linkRange = orbit->apogeeAltitude();
  }
  return p;
}

void Scenario::validate() const {
  try {
    (void)orbitPreset(preset);
  } catch (const ConfigError& e) {
    invalid("preset", e.what());
  }
  if (orbit) {
    try {
      orbit->validate();
    } catch (const std::domain_error& e) {
      invalid("orbit", e.what());
    }
  }
  requirePositive("wavelength", wavelength);
  requireNonNegative("fibre_delay", fibreDelay);
  if (!(fibreIndex >= 1.0 && std::isfinite(fibreIndex))) invalid("fibre_index", "must be >= 1");
  requirePositive("detector_resolution", detectorResolution);
  requirePositive("switch_time", switchTime);
  if (!(visibility > 0.0 && visibility <= 1.0)) invalid("visibility", "must lie in (0, 1]");
  if (workers == 0) invalid("workers", "must be at least 1");
  for (const auto* gs : {&stationA, &stationB}) {
    if (*gs && !(std::abs((*gs)->latitude) <= kPi / 2.0)) {
      invalid("latitude", "must lie in [-90, 90]");
    }
  }

  requireNonNegative("separation", geometry.separation);
  if (!std::isfinite(geometry.memoryDelay)) invalid("memory_delay", "must be finite");
  requireNonNegative("relative_speed", geometry.relativeSpeed);
  if (!(geometry.relativeSpeed < Constants::c)) invalid("relative_speed", "must be below c");
  requireNonNegative("link_distance", geometry.linkDistance);
  if (!(geometry.speedFactor >= 1.0 && std::isfinite(geometry.speedFactor))) {
    invalid("speed_factor", "must be >= 1");
  }
  if (geometry.linkAltitude) requirePositive("link_altitude", *geometry.linkAltitude);

  if (wigner.speed) requireNonNegative("speed", *wigner.speed);
  requirePositive("r1", gravitomagnetic.r1);
  if (gravitomagnetic.r2) requirePositive("r2", *gravitomagnetic.r2);
  if (gravitomagnetic.impactParameter) {
    requirePositive("impact_parameter", *gravitomagnetic.impactParameter);
  }

  requireNonNegative("acceleration", qft.acceleration);
  requirePositive("mode_frequency", qft.modeFrequency);
  if (!std::isfinite(qft.berryG)) invalid("berry_g", "must be finite");
  requireNonNegative("overlap_time", qft.overlapTime);
  if (qft.interactionTime) requirePositive("interaction_time", *qft.interactionTime);

  if (diffusion.cDiff) requireNonNegative("c", *diffusion.cDiff);
  if (diffusion.dDrift && !std::isfinite(*diffusion.dDrift)) invalid("d", "must be finite");
  requirePositive("frequency", diffusion.frequency);
  if (diffusion.travelTime) requireNonNegative("travel_time", *diffusion.travelTime);
}

Scenario scenarioFromConfig(const ConfigFile& cfg) {
  cfg.rejectUnknownSections({"mission", "orbit", "station_a", "station_b", "geometry", "wigner",
                             "gravitomagnetic", "qft", "diffusion", "effects"});
  const Reader r(cfg);
  Scenario s;

  const std::string_view m = "mission";
  if (auto v = cfg.getString(m, "preset")) {
    s.preset = *v;
    r.guard(m, "preset", [&] { (void)orbitPreset(s.preset); });
  }
  if (auto v = cfg.getString(m, "source")) {
    if (*v == "ground") s.source = SourceLocation::Ground;
    else if (*v == "satellite") s.source = SourceLocation::Satellite;
    else cfg.fail(*cfg.find(m, "source"), "source must be 'ground' or 'satellite'");
  }
  r.real(m, "wavelength", s.wavelength, positive);
  r.real(m, "fibre_delay", s.fibreDelay, nonNegative);
  r.real(m, "fibre_index", s.fibreIndex, [](std::string_view k, double v) {
    if (!(v >= 1.0)) invalid(k, "must be >= 1");
  });
  r.real(m, "detector_resolution", s.detectorResolution, positive);
  r.real(m, "switch_time", s.switchTime, positive);
  r.real(m, "visibility", s.visibility, [](std::string_view k, double v) {
    if (!(v > 0.0 && v <= 1.0)) invalid(k, "must lie in (0, 1]");
  });
  if (auto v = cfg.getUnsigned(m, "photon_budget")) s.photonBudget = *v;
  if (auto v = cfg.getUnsigned(m, "seed")) s.seed = *v;
  if (auto v = cfg.getUnsigned(m, "workers")) {
    if (*v == 0 || *v > 1024) cfg.fail(*cfg.find(m, "workers"), "workers must lie in [1, 1024]");
    s.workers = static_cast<unsigned>(*v);
  }

  if (cfg.hasSection("orbit")) {
    OrbitSpec o;
    const std::string_view sec = "orbit";
    r.real(sec, "semi_major_axis", o.semiMajorAxis, positive);
    r.real(sec, "eccentricity", o.eccentricity, [](std::string_view k, double v) {
      if (!(v >= 0.0 && v < 1.0)) invalid(k, "must lie in [0, 1)");
    });
    r.angle(sec, "inclination", o.inclination);
    r.angle(sec, "raan", o.raan);
    r.angle(sec, "arg_perigee", o.argPerigee);
    r.angle(sec, "mean_anomaly", o.meanAnomalyAtEpoch);
    r.real(sec, "epoch", o.epoch, any);
    try {
      o.validate();
    } catch (const std::domain_error& e) {
      invalid("orbit", e.what());
    }
    s.orbit = o;
  }
  s.stationA = readStation(r, "station_a");
  s.stationB = readStation(r, "station_b");

  const std::string_view g = "geometry";
  r.real(g, "separation", s.geometry.separation, nonNegative);
  r.real(g, "memory_delay", s.geometry.memoryDelay, any);
  r.real(g, "relative_speed", s.geometry.relativeSpeed, [](std::string_view k, double v) {
    requireNonNegative(k, v);
    if (!(v < Constants::c)) invalid(k, "must be below c");
  });
  r.real(g, "link_distance", s.geometry.linkDistance, nonNegative);
  r.real(g, "speed_factor", s.geometry.speedFactor, [](std::string_view k, double v) {
    if (!(v >= 1.0)) invalid(k, "must be >= 1");
  });
  r.real(g, "link_altitude", s.geometry.linkAltitude, positive);

  const std::string_view w = "wigner";
  r.angle(w, "theta", s.wigner.theta);
  r.angle(w, "phi", s.wigner.phi);
  r.angle(w, "theta_b", s.wigner.thetaB);
  r.angle(w, "phi_b", s.wigner.phiB);
  r.real(w, "speed", s.wigner.speed, nonNegative);

  const std::string_view gm = "gravitomagnetic";
  r.real(gm, "r1", s.gravitomagnetic.r1, positive);
  r.real(gm, "r2", s.gravitomagnetic.r2, positive);
  r.angle(gm, "theta", s.gravitomagnetic.theta);
  r.real(gm, "impact_parameter", s.gravitomagnetic.impactParameter, positive);

  const std::string_view q = "qft";
  r.real(q, "acceleration", s.qft.acceleration, nonNegative);
  r.real(q, "mode_frequency", s.qft.modeFrequency, positive);
  r.real(q, "berry_g", s.qft.berryG, any);
  r.real(q, "overlap_time", s.qft.overlapTime, nonNegative);
  r.flag(q, "retroreflector", s.qft.retroreflector);
  r.real(q, "interaction_time", s.qft.interactionTime, positive);

  const std::string_view d = "diffusion";
  r.real(d, "c", s.diffusion.cDiff, nonNegative);
  r.real(d, "d", s.diffusion.dDrift, any);
  r.real(d, "frequency", s.diffusion.frequency, positive);
  r.real(d, "travel_time", s.diffusion.travelTime, nonNegative);

  const std::string_view e = "effects";
  r.flag(e, "wigner", s.effects.wigner);
  r.flag(e, "gravitomagnetic", s.effects.gravitomagnetic);
  r.flag(e, "interferometry", s.effects.interferometry);
  r.flag(e, "qft", s.effects.qft);
  r.flag(e, "diffusion", s.effects.diffusion);
  r.flag(e, "bell", s.effects.bell);

  cfg.rejectUnused();
  s.validate();
  return s;
}

Scenario loadScenario(const std::string& path) {
  return scenarioFromConfig(ConfigFile::load(path));
}

}  // namespace relsat
