// relsat: scenario-driven effect reports and plot data for space-based
// quantum links.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "relsat/bell_stats.hpp"
#include "relsat/csv.hpp"
#include "relsat/errors.hpp"
#include "relsat/orbits.hpp"
#include "relsat/polarization_diffusion.hpp"
#include "relsat/qft_effects.hpp"
#include "relsat/report.hpp"
#include "relsat/scenario.hpp"
#include "relsat/units.hpp"
#include "relsat/wigner.hpp"

namespace {

using namespace relsat;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOptions {
  std::string scenarioPath;
  std::string format = "table";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<std::string> effects;

  bool csv() const { return format == "csv"; }

  Scenario scenario() const {
    Scenario s = scenarioPath.empty() ? Scenario{} : loadScenario(scenarioPath);
    if (seed) s.seed = *seed;
    if (workers) s.workers = *workers;
    if (effects) s.effects = EffectFlags::fromList(*effects);
    s.validate();
    return s;
  }
};

// Two-column output shared by the summary-style subcommands.
class KeyValueOut {
 public:
  explicit KeyValueOut(bool csv) : csv_(csv), writer_(std::cout) {
    if (csv_) writer_.row("quantity", "value");
  }
  void put(const std::string& key, double value) {
    if (csv_) writer_.row(key, value);
    else std::cout << key << " = " << formatReal(value) << '\n';
  }

 private:
  bool csv_;
  CsvWriter writer_;
};

int runReportCommand(const CommonOptions& opt) {
  const EffectReport report = runReport(opt.scenario());
  if (opt.csv()) writeReportCsv(std::cout, report);
  else writeReportTable(std::cout, report);
  return kExitOk;
}

struct BellOptions {
  std::optional<double> visibility;
  std::optional<std::uint64_t> pairs;
  unsigned trials = 1;
  bool curve = false;
};

int runBellCommand(const CommonOptions& opt, const BellOptions& bell) {
  const Scenario s = opt.scenario();
  const double v = bell.visibility.value_or(s.visibility);
  const ChshSettings settings = standardChshSettings();
  const std::uint64_t pairs =
      bell.pairs.value_or(s.photonBudget > 0 ? s.photonBudget : requiredPhotons(v));
  if (bell.trials == 1) {
    const CoincidenceCounts counts = simulateCoincidences(v, pairs, settings, s.seed, s.workers);
    if (opt.csv()) {
      writeCountsCsv(std::cout, counts, settings);
      return kExitOk;
    }
    const ChshResult r = chshEstimate(counts, settings);
    KeyValueOut out(false);
    out.put("visibility", v);
    out.put("pairs", static_cast<double>(pairs));
    out.put("seed", static_cast<double>(s.seed));
    for (std::size_t i = 0; i < 4; ++i) out.put("E" + std::to_string(i + 1), r.correlations[i]);
    out.put("S", r.sValue);
    out.put("sigma", r.sigma);
    out.put("n_sigma", r.nSigmaViolation);
    return kExitOk;
  }
  // Trial t uses seed + t so that any single trial can be replayed.
  unsigned successes = 0;
  for (unsigned t = 0; t < bell.trials; ++t) {
    const ChshResult r = chshEstimate(
        simulateCoincidences(v, pairs, settings, s.seed + t, s.workers), settings);
    if (r.nSigmaViolation >= 3.0) ++successes;
  }
  KeyValueOut out(opt.csv());
  out.put("visibility", v);
  out.put("pairs", static_cast<double>(pairs));
  out.put("seed", static_cast<double>(s.seed));
  out.put("trials", bell.trials);
  out.put("success_fraction", static_cast<double>(successes) / bell.trials);
  return kExitOk;
}

struct DiffusionOptions {
  std::optional<double> c;
  std::optional<double> d;
  double lambda = 1.0;
  double mean = 0.0;
  double sigma = 0.3;
  int modes = 128;
  int points = 256;
};

int runDiffusionCommand(const CommonOptions& opt, const DiffusionOptions& dopt) {
  const Scenario s = opt.scenario();
  const CmbEpoch cmb;
  DiffusionParams p;
  p.cDiff = dopt.c.value_or(
      s.diffusion.cDiff.value_or(diffusionBound(cmb.muBound, cmb.time, cmb.frequency)));
  p.dDrift = dopt.d.value_or(
      s.diffusion.dDrift.value_or(driftBound(cmb.chiBound, cmb.time, cmb.frequency)));
  const CircleDensity rho0 =
      CircleDensity::wrappedGaussian(toRadians(dopt.mean, AngleUnit::Degree), dopt.sigma,
                                     dopt.modes);
  const CircleDensity rho1 = evolveEquator(rho0, p, dopt.lambda);
  const auto g0 = rho0.toGrid(dopt.points);
  const auto g1 = rho1.toGrid(dopt.points);
  CsvWriter csv(std::cout);
  csv.row("beta", "rho_initial", "rho_final");
  for (int j = 0; j < dopt.points; ++j) {
    csv.row(kTwoPi * j / dopt.points, g0[static_cast<std::size_t>(j)],
            g1[static_cast<std::size_t>(j)]);
  }
  return kExitOk;
}

struct WignerOptions {
  std::optional<double> theta, phi, thetaB, phiB, speed;
};

int runWignerCommand(const CommonOptions& opt, const WignerOptions& w) {
  const Scenario s = opt.scenario();
  const auto rad = [](const std::optional<double>& deg, double fallback) {
    return deg ? toRadians(*deg, AngleUnit::Degree) : fallback;
  };
  const double theta = rad(w.theta, s.wigner.theta);
  const double phi = rad(w.phi, s.wigner.phi);
  const double thetaB = rad(w.thetaB, s.wigner.thetaB);
  const double phiB = rad(w.phiB, s.wigner.phiB);
  double speed = 0.0;
  if (w.speed) speed = *w.speed;
  else if (s.wigner.speed) speed = *s.wigner.speed;
  else {
    const OrbitPreset p = s.resolvedOrbit();
    if (p.fixedRange) throw ConfigError("preset '" + p.name + "' has no orbital speed; pass --speed");
    speed = propagate(p.orbit, 0.0).velocity.norm();
  }
  const double beta = speed / Constants::c;
  const Vec3 boostDir(std::sin(thetaB) * std::cos(phiB), std::sin(thetaB) * std::sin(phiB),
                      std::cos(thetaB));
  const Vec3 khat(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                  std::cos(theta));
  const LorentzMatrix boost = LorentzMatrix::boost(beta * boostDir);
  const FourMomentum p = FourMomentum::photon(khat);
  const double exactMinimal = wignerAngle(boost, p, StandardRotationConvention::MinimalAxis);
  const double exactYThenZ = wignerAngle(boost, p, StandardRotationConvention::YThenZ);
  const double firstOrder = firstOrderBoostPhase(theta, phi, thetaB, phiB, speed);
  KeyValueOut out(opt.csv());
  out.put("beta", beta);
  out.put("first_order_phase", firstOrder);
  out.put("exact_angle_minimal_axis", exactMinimal);
  out.put("exact_angle_y_then_z", exactYThenZ);
  if (firstOrder != 0.0) out.put("ratio_minimal_axis_to_first_order", exactMinimal / firstOrder);
  return kExitOk;
}

struct OrbitOptions {
  std::optional<std::string> preset;
  double duration = -1.0;
  double step = 60.0;
};

int runOrbitCommand(const CommonOptions& opt, const OrbitOptions& o) {
  Scenario s = opt.scenario();
  if (o.preset) {
    s.preset = *o.preset;
    s.orbit.reset();
  }
  const OrbitPreset p = s.resolvedOrbit();
  if (p.fixedRange) {
    KeyValueOut out(opt.csv());
    out.put("range", p.linkRange);
    out.put("light_time", p.linkRange / Constants::c);
    return kExitOk;
  }
  if (!(o.step > 0.0)) throw ConfigError("invalid value for 'step': must be positive");
  const double duration = o.duration >= 0.0 ? o.duration : orbitalPeriod(p.orbit);
  CsvWriter csv(std::cout);
  if (s.stationA) csv.row("t", "x", "y", "z", "vx", "vy", "vz", "range", "range_rate");
  else csv.row("t", "x", "y", "z", "vx", "vy", "vz");
  const auto steps = static_cast<long long>(std::floor(duration / o.step + 1e-9));
  for (long long i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * o.step;
    const StateVector sv = propagate(p.orbit, t);
    const Vec3& x = sv.position;
    const Vec3& v = sv.velocity;
    if (s.stationA) {
      const RelativeGeometry g = relativeGeometry(stationState(*s.stationA, t), sv);
      csv.row(t, x.x(), x.y(), x.z(), v.x(), v.y(), v.z(), g.range, g.rangeRate);
    } else {
      csv.row(t, x.x(), x.y(), x.z(), v.x(), v.y(), v.z());
    }
  }
  return kExitOk;
}

struct CurveOptions {
  std::string curve = "nv";
  int points = 57;
  double vMin = 0.72;
  double vMax = 1.0;
  double deltaMax = 0.0;
};

int runCurvesCommand(const CommonOptions& opt, const CurveOptions& c) {
  const Scenario s = opt.scenario();
  if (c.curve == "nv") {
    writeRequiredPhotonsCsv(std::cout, requiredPhotonsCurve(c.vMin, c.vMax, c.points));
    return kExitOk;
  }
  // Ralph C(delta)/C_max from 0 to deltaMax (default 5 detector resolutions).
  if (c.points < 2) throw ConfigError("invalid value for 'points': must be at least 2");
  const EventOperatorModel model{s.detectorResolution, 1.0};
  model.validate();
  const double span = c.deltaMax > 0.0 ? c.deltaMax : 5.0 * s.detectorResolution;
  CsvWriter csv(std::cout);
  csv.row("delta", "C");
  for (int i = 0; i < c.points; ++i) {
    const double delta = span * i / (c.points - 1);
    csv.row(delta, ralphCorrelation(model, delta));
  }
  return kExitOk;
}

void addCommonOptions(CLI::App& app, CommonOptions& opt) {
  app.add_option("--scenario", opt.scenarioPath, "Scenario file (key = value with [sections])");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--seed", opt.seed, "Monte Carlo seed (overrides the scenario)");
  app.add_option("--workers", opt.workers, "Monte Carlo worker threads")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--effects", opt.effects,
                 "Comma list of effect groups: wigner,gravitomagnetic,interferometry,qft,"
                 "diffusion,bell (or all/none)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic and quantum effect budgets for space-based quantum links"};
  app.require_subcommand(1);
  CommonOptions common;
  addCommonOptions(app, common);

  auto* report = app.add_subcommand("report", "Evaluate every enabled effect for a scenario");
  report->fallthrough();

  BellOptions bell;
  auto* bellCmd = app.add_subcommand("bell-sim", "Monte Carlo CHSH coincidences");
  bellCmd->fallthrough();
  bellCmd->add_option("--visibility", bell.visibility, "Entanglement visibility");
  bellCmd->add_option("--pairs", bell.pairs, "Detected pairs (default: required photons)");
  bellCmd->add_option("--trials", bell.trials, "Repeat and report the 3-sigma success rate")
      ->check(CLI::PositiveNumber);

  DiffusionOptions diff;
  auto* diffCmd = app.add_subcommand("diffusion", "Evolve a polarization-angle density");
  diffCmd->fallthrough();
  diffCmd->add_option("--c", diff.c, "Diffusion coefficient (s^-2)");
  diffCmd->add_option("--d", diff.d, "Drift coefficient (s^-2)");
  diffCmd->add_option("--lambda", diff.lambda, "Affine span");
  diffCmd->add_option("--mean", diff.mean, "Initial mean angle (deg)");
  diffCmd->add_option("--sigma", diff.sigma, "Initial width (rad)")->check(CLI::PositiveNumber);
  diffCmd->add_option("--modes", diff.modes, "Fourier modes")->check(CLI::Range(1, 1 << 20));
  diffCmd->add_option("--points", diff.points, "Output grid points")->check(CLI::Range(2, 1 << 22));

  WignerOptions wig;
  auto* wigCmd = app.add_subcommand("wigner", "Exact and first-order boost phase");
  wigCmd->fallthrough();
  wigCmd->add_option("--theta", wig.theta, "Photon polar angle (deg)");
  wigCmd->add_option("--phi", wig.phi, "Photon azimuth (deg)");
  wigCmd->add_option("--theta-b", wig.thetaB, "Boost polar angle (deg)");
  wigCmd->add_option("--phi-b", wig.phiB, "Boost azimuth (deg)");
  wigCmd->add_option("--speed", wig.speed, "Boost speed (m/s)");

  OrbitOptions orb;
  auto* orbCmd = app.add_subcommand("orbit", "Propagate the scenario orbit");
  orbCmd->fallthrough();
  orbCmd->add_option("--preset", orb.preset, "Orbit preset")
      ->check(CLI::IsMember(orbitPresetNames()));
  orbCmd->add_option("--duration", orb.duration, "Span in seconds (default: one period)");
  orbCmd->add_option("--step", orb.step, "Output step in seconds");

  CurveOptions cur;
  auto* curCmd = app.add_subcommand("curves", "Plot data: N(V) or Ralph C(delta)");
  curCmd->fallthrough();
  curCmd->add_option("--curve", cur.curve, "nv or ralph")->check(CLI::IsMember({"nv", "ralph"}));
  curCmd->add_option("--points", cur.points, "Number of samples");
  curCmd->add_option("--v-min", cur.vMin, "Smallest visibility");
  curCmd->add_option("--v-max", cur.vMax, "Largest visibility");
  curCmd->add_option("--delta-max", cur.deltaMax, "Largest proper-time difference (s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*report) return runReportCommand(common);
    if (*bellCmd) return runBellCommand(common, bell);
    if (*diffCmd) return runDiffusionCommand(common, diff);
    if (*wigCmd) return runWignerCommand(common, wig);
    if (*orbCmd) return runOrbitCommand(common, orb);
    if (*curCmd) return runCurvesCommand(common, cur);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitConfig;
}
