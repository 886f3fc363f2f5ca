#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relsat/config_file.hpp"
#include "relsat/orbits.hpp"

namespace relsat {

enum class SourceLocation { Ground, Satellite };

/// Optional effect groups. Geometry entries are always reported.
struct EffectFlags {
  bool wigner = true;
  bool gravitomagnetic = true;
  bool interferometry = true;
  bool qft = true;
  bool diffusion = true;
  bool bell = true;

  static std::vector<std::string> groupNames();
  /// Enables exactly the listed groups ("all", "none" and "geometry" are also
  /// accepted). Throws ConfigError on an unknown name.
  static EffectFlags fromList(std::string_view commaList);
};

struct GeometrySetup {
  double separation = 1.0e6;     // m, distance X1 travelled by the free photon
  double memoryDelay = 2.0e-5;   // s, storage time t1 of the held photon
  double relativeSpeed = 15.0e3;  // m/s
  double linkDistance = 1.5e6;   // m
  double speedFactor = 1.0;      // kappa
  std::optional<double> linkAltitude;  // m; defaults to the preset's link range
};

struct WignerSetup {
  double theta = kDefaultAngle;  // rad
  double phi = kDefaultAngle;
  double thetaB = kDefaultAngle;
  double phiB = 0.0;
  std::optional<double> speed;  // m/s; defaults to the orbital speed

  static constexpr double kDefaultAngle = 1.5707963267948966;
};

struct GravitomagneticSetup {
  double r1 = 12270e3;               // m
  std::optional<double> r2;          // m; empty means infinity
  double theta = 0.7853981633974483;  // rad
  std::optional<double> impactParameter;  // m; defaults to the mean Earth radius
};

struct QftSetup {
  double acceleration = 9.81;    // m/s^2
  double modeFrequency = 1.0e6;  // rad/s
  double berryG = 0.5;
  double overlapTime = 1.3e-3;   // s
  bool retroreflector = false;
  std::optional<double> interactionTime;  // s; defaults to the spacelike window
};

struct DiffusionSetup {
  std::optional<double> cDiff;  // s^-2; defaults to the CMB-derived bound
  std::optional<double> dDrift;
  double frequency = 3.75e14;  // Hz
  std::optional<double> travelTime;  // s; defaults to the link light time
};

struct Scenario {
  std::string preset = "leo1000";
  std::optional<OrbitSpec> orbit;  // overrides the preset's orbit when present
  SourceLocation source = SourceLocation::Satellite;
  double wavelength = 800e-9;          // m
  double fibreDelay = 20e-6;           // s
  double fibreIndex = 1.0;
  double detectorResolution = 10e-12;  // s
  double switchTime = 10e-9;           // s
  double visibility = 0.9;
  std::uint64_t photonBudget = 0;  // 0: use the required photon count
  std::uint64_t seed = 1;
  unsigned workers = 1;

  std::optional<GroundStation> stationA;
  std::optional<GroundStation> stationB;

  GeometrySetup geometry;
  WignerSetup wigner;
  GravitomagneticSetup gravitomagnetic;
  QftSetup qft;
  DiffusionSetup diffusion;
  EffectFlags effects;

  /// Preset with any [orbit] override applied.
  OrbitPreset resolvedOrbit() const;
  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

/// Parses and validates; unknown sections and keys are rejected with their
/// line and column. Angles in the file are in degrees.
Scenario loadScenario(const std::string& path);
Scenario scenarioFromConfig(const ConfigFile& cfg);

}  // namespace relsat
