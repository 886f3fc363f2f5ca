#include "properties.hpp"

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "relsat/gravitomagnetism.hpp"
#include "relsat/orbits.hpp"
#include "relsat/polarization_diffusion.hpp"

namespace relsat::testing {

namespace {

double relDiff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

PropertyResult minkowskiMetricPreservation(std::uint64_t seed, int cases) {
  Gen g(seed);
  PropertyResult r{"Minkowski metric preservation", 0.0, 1e-10, cases};
  // Defects are relative to the squared largest entry, the rounding scale of M^T eta M.
  const auto scaled = [](const LorentzMatrix& m) {
    const double big = std::max(1.0, m.matrix().cwiseAbs().maxCoeff());
    return m.metricDefect() / (big * big);
  };
  for (int i = 0; i < cases; ++i) {
    const LorentzMatrix a = g.lorentz(3.0);
    const LorentzMatrix b = g.lorentz(3.0);
    const double roundTrip = ((a * a.inverse()).matrix() - Mat4::Identity()).cwiseAbs().maxCoeff() /
                             std::pow(std::max(1.0, a.matrix().cwiseAbs().maxCoeff()), 2);
    r.worst = std::max({r.worst, scaled(a), scaled(a * b), scaled(b * a.inverse()), roundTrip});
  }
  return r;
}

PropertyResult intervalFrameInvariance(std::uint64_t seed, int cases) {
  Gen g(seed);
  PropertyResult r{"interval frame invariance", 0.0, 1e-9, cases};
  for (int i = 0; i < cases; ++i) {
    const Event e1 = g.event(1e-3, 1e6);
    const Event e2 = g.event(1e-3, 1e6);
    const Vec3 beta = g.uniform(0.0, 0.9) * g.unitVector();
    const Vec4 d = e2.fourVector() - e1.fourVector();
    const Vec4 dp = toMovingFrame(e2, beta).fourVector() - toMovingFrame(e1, beta).fourVector();
    const double s = minkowskiDot(d, d);
    const double sp = minkowskiDot(dp, dp);
    const double scale = d(0) * d(0) + d.tail<3>().squaredNorm();
    r.worst = std::max(r.worst, std::abs(s - sp) / scale);
    const IntervalResult a = invariantInterval(e1, e2);
    const IntervalResult b = invariantInterval(toMovingFrame(e1, beta), toMovingFrame(e2, beta));
    if (a.kind != b.kind && std::abs(s) > 1e-6 * scale) r.worst = std::max(r.worst, 1.0);
  }
  return r;
}

PropertyResult concurrenceUnderHelicityPhases(std::uint64_t seed, int cases) {
  Gen g(seed);
  PropertyResult r{"concurrence invariance under helicity phases", 0.0, 1e-12, cases};
  for (int i = 0; i < cases; ++i) {
    const TwoPhotonState s = g.twoPhotonState();
    const double c0 = concurrence(s);
    const TwoPhotonState a = applyHelicityPhase(s, g.uniform(-kPi, kPi), Photon::First);
    const TwoPhotonState b = applyHelicityPhase(a, g.uniform(-kPi, kPi), Photon::Second);
    const TwoPhotonState c = applyHelicityPhase(b, g.uniform(-kPi, kPi), Photon::Both);
    r.worst = std::max({r.worst, std::abs(concurrence(a) - c0), std::abs(concurrence(b) - c0),
                        std::abs(concurrence(c) - c0)});
  }
  return r;
}

PropertyResult transportOrthonormality(std::uint64_t seed, int cases) {
  Gen g(seed);
  PropertyResult r{"transport orthonormality drift", 0.0, 1e-9, cases};
  const SpinningBody earth = SpinningBody::earth();
  // Weak-field lensing scale fields with a dipole gravitomagnetic part.
  const double gm = Constants::G * earth.mass / (Constants::c * Constants::c);
  const double gj = Constants::G * earth.angularMomentum / std::pow(Constants::c, 3);
  const FieldSampler field = [gm, gj](const Vec3& x) {
    const double rr = std::max(x.norm(), 6.4e6);
    const Vec3 n = x / rr;
    const Vec3 j = Vec3::UnitZ();
    GravField f;
    f.omega = gj / std::pow(rr, 3) * (3.0 * n.dot(j) * n - j);
    f.eg = -gm / (rr * rr) * n;
    return f;
  };
  for (int i = 0; i < cases; ++i) {
    RayState ray;
    ray.position = g.uniform(7e6, 2e7) * g.unitVector();
    ray.khat = g.unitVector();
    ray.fhat = ray.khat.unitOrthogonal();
    ray.fhat = Eigen::AngleAxisd(g.uniform(-kPi, kPi), ray.khat) * ray.fhat;
    const RayState out = transportRay(ray, field, 2e7, 400);
    r.worst = std::max({r.worst, std::abs(out.khat.norm() - 1.0), std::abs(out.fhat.norm() - 1.0),
                        std::abs(out.khat.dot(out.fhat))});
  }
  return r;
}

PropertyResult probabilityConservation(std::uint64_t seed, int cases) {
  Gen g(seed);
  PropertyResult r{"probability conservation", 0.0, 1e-12, cases};
  for (int i = 0; i < cases; ++i) {
    const CircleDensity rho0 =
        CircleDensity::wrappedGaussian(g.uniform(-kPi, kPi), g.uniform(0.2, 1.0), 32);
    const double c = g.uniform(0.0, 0.5);
    const double d = g.uniform(-1.0, 1.0);
    const CircleDensity exact = evolveEquator(rho0, DiffusionParams{c, d}, g.uniform(0.0, 2.0));
    const double amp = g.uniform(0.0, 0.5);
    const double phase = g.uniform(-kPi, kPi);
    const EquatorGenerator varying{[=](double b) { return c * (1.0 + amp * std::cos(b + phase)); },
                                   [=](double b) { return d * (1.0 + amp * std::sin(b)); }};
    const CircleDensity general = evolveEquatorGeneral(rho0, varying, g.uniform(0.0, 0.5));
    for (const CircleDensity* rho : {&exact, &general}) {
      const auto grid = rho->sample(128);
      double mass = 0.0;
      for (double v : grid) mass += v;
      mass *= kTwoPi / 128.0;
      r.worst = std::max(r.worst, std::abs(mass - 1.0));
    }
    const TwoPhotonState s = g.twoPhotonState();
    const TwoPhotonState t = applyHelicityPhase(s, g.uniform(-kPi, kPi), Photon::Both);
    double norm = 0.0;
    for (const auto& a : t.amplitudes()) norm += std::norm(a);
    r.worst = std::max(r.worst, std::abs(norm - 1.0));
  }
  return r;
}

PropertyResult keplerConservation(std::uint64_t seed, int cases) {
  Gen g(seed);
  PropertyResult r{"Kepler energy and angular momentum drift", 0.0, 1e-9, cases};
  for (int i = 0; i < cases; ++i) {
    OrbitSpec o;
    const double rp = OrbitEarth::radius + g.uniform(200e3, 2000e3);
    o.eccentricity = g.uniform(0.0, 0.9);
    o.semiMajorAxis = rp / (1.0 - o.eccentricity);
    o.inclination = g.uniform(0.0, kPi);
    o.raan = g.uniform(0.0, kTwoPi);
    o.argPerigee = g.uniform(0.0, kTwoPi);
    o.meanAnomalyAtEpoch = g.uniform(0.0, kTwoPi);
    const double period = orbitalPeriod(o);
    const StateVector s0 = propagate(o, 0.0);
    const double e0 = specificEnergy(s0);
    const Vec3 h0 = specificAngularMomentum(s0);
    for (int k = 1; k <= 16; ++k) {
      const StateVector s = propagate(o, period * k / 16.0);
      r.worst = std::max({r.worst, relDiff(specificEnergy(s), e0),
                          (specificAngularMomentum(s) - h0).norm() / h0.norm()});
    }
  }
  return r;
}

std::vector<PropertyResult> allProperties(std::uint64_t seed, int cases) {
  return {minkowskiMetricPreservation(seed, cases),    intervalFrameInvariance(seed + 1, cases),
          concurrenceUnderHelicityPhases(seed + 2, cases), transportOrthonormality(seed + 3, cases / 10 + 1),
          probabilityConservation(seed + 4, cases / 10 + 1), keplerConservation(seed + 5, cases)};
}

}  // namespace relsat::testing
