#include "relsat/gravitomagnetism.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <limits>

#include "relsat/errors.hpp"

namespace relsat {

namespace {

constexpr double kRayTolerance = 1e-10;

struct RayDerivative {
  Vec3 dx, dk, df;
};

RayDerivative rayDerivative(const FieldSampler& field, const Vec3& x, const Vec3& k,
                            const Vec3& f) {
  const GravField g = field(x);
  if (!g.omega.allFinite() || !g.eg.allFinite()) {
    throw NumericError("transportRay: non-finite field sample");
  }
  // RK stages leave k slightly off the unit sphere; Omega uses the direction.
  const Vec3 kn = k.normalized();
  const Vec3 omega = rotationRate(g, kn, kn);
  return {k, omega.cross(k), omega.cross(f)};
}

double gravitomagneticLength(const SpinningBody& body) {
  return 4.0 * Constants::G * body.angularMomentum /
         (Constants::c * Constants::c * Constants::c);
}

}  // namespace

void RayState::validate() const {
  if (!position.allFinite() || !khat.allFinite() || !fhat.allFinite() ||
      !std::isfinite(lambda)) {
    throw DomainError("RayState: non-finite components");
  }
  if (std::abs(khat.norm() - 1.0) > kRayTolerance ||
      std::abs(fhat.norm() - 1.0) > kRayTolerance ||
      std::abs(khat.dot(fhat)) > kRayTolerance) {
    throw DomainError("RayState: khat and fhat must be orthonormal");
  }
}

SpinningBody SpinningBody::earth(const EarthParams& earth) {
  return {earth.mass, earth.angularMomentum, Vec3::UnitZ()};
}

void SpinningBody::validate() const {
  if (!(mass > 0.0)) throw DomainError("SpinningBody: mass must be positive");
  if (!(angularMomentum >= 0.0)) {
    throw DomainError("SpinningBody: angular momentum must be non-negative");
  }
  if (std::abs(spinAxis.norm() - 1.0) > kRayTolerance) {
    throw DomainError("SpinningBody: spin axis must be a unit vector");
  }
}

Vec3 rotationRate(const GravField& field, const Vec3& khat, const Vec3& k) {
  if (std::abs(khat.norm() - 1.0) > kRayTolerance) {
    throw DomainError("rotationRate: khat must be a unit vector");
  }
  return 2.0 * field.omega - field.omega.dot(khat) * khat - field.eg.cross(k);
}

RayState transportRay(const RayState& initial, const FieldSampler& field, double lambdaEnd,
                      int steps) {
  initial.validate();
  if (steps < 2) throw DomainError("transportRay: need at least 2 steps");
  if (!std::isfinite(lambdaEnd)) throw DomainError("transportRay: non-finite end parameter");

  const double h = (lambdaEnd - initial.lambda) / steps;
  RayState s = initial;
  for (int i = 0; i < steps; ++i) {
    const RayDerivative k1 = rayDerivative(field, s.position, s.khat, s.fhat);
    const RayDerivative k2 = rayDerivative(field, s.position + 0.5 * h * k1.dx,
                                           s.khat + 0.5 * h * k1.dk, s.fhat + 0.5 * h * k1.df);
    const RayDerivative k3 = rayDerivative(field, s.position + 0.5 * h * k2.dx,
                                           s.khat + 0.5 * h * k2.dk, s.fhat + 0.5 * h * k2.df);
    const RayDerivative k4 = rayDerivative(field, s.position + h * k3.dx,
                                           s.khat + h * k3.dk, s.fhat + h * k3.df);
    s.position += (h / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    s.khat += (h / 6.0) * (k1.dk + 2.0 * k2.dk + 2.0 * k3.dk + k4.dk);
    s.fhat += (h / 6.0) * (k1.df + 2.0 * k2.df + 2.0 * k3.df + k4.df);
    s.khat.normalize();
    s.fhat.normalize();
    s.lambda = initial.lambda + (i + 1) * h;
  }
  if (!s.khat.allFinite() || !s.fhat.allFinite() || !s.position.allFinite()) {
    throw NumericError("transportRay: integration diverged");
  }
  return s;
}

double phaseRate(const Vec3& omega, const Vec3& khat, double frameTerm) {
  if (std::abs(khat.norm() - 1.0) > kRayTolerance) {
    throw DomainError("phaseRate: khat must be a unit vector");
  }
  return omega.dot(khat) + frameTerm;
}

double kerrPrincipalNullRotation(const SpinningBody& body, double r1, double r2,
                                 double theta) {
  body.validate();
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw DomainError("Kerr rotation: radii must be positive");
  if (std::isnan(theta)) throw DomainError("Kerr rotation: theta is NaN");
  const double spinLength = body.angularMomentum / (body.mass * Constants::c);  // J/(Mc)
  const double inv2 = std::isinf(r2) ? 0.0 : 1.0 / r2;
  const double s = -spinLength * (1.0 / r1 - inv2) * std::cos(theta);
  if (std::abs(s) > 1.0) throw DomainError("Kerr rotation: radii too close to the body");
  return std::asin(s);
}

double axialImpactRotation(const SpinningBody& body, double impactParameter, bool parallel) {
  body.validate();
  if (!(impactParameter > 0.0)) throw DomainError("impact parameter must be positive");
  const double s = gravitomagneticLength(body) / (impactParameter * impactParameter);
  if (s >= 1.0) throw DomainError("impact parameter inside the gravitomagnetic radius");
  const double chi = std::asin(s);
  return parallel ? chi : -chi;
}

double closedPathRotation(const SpinningBody& body, double s1, double s2) {
  body.validate();
  if (!(s1 > 0.0) || !(s2 > 0.0)) throw DomainError("impact parameters must be positive");
  return gravitomagneticLength(body) * (1.0 / (s1 * s1) - 1.0 / (s2 * s2));
}

}  // namespace relsat
