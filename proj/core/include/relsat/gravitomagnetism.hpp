#pragma once

#include <functional>

#include "relsat/lorentz.hpp"
#include "relsat/units.hpp"

namespace relsat {

/// Gravitomagnetic (omega = B_g/2) and gravitoelectric (E_g) fields at a
/// point, both in 1/m with the affine parameter measured in meters.
struct GravField {
  Vec3 omega = Vec3::Zero();
  Vec3 eg = Vec3::Zero();
};

/// Field as a function of position. Must be side-effect free.
using FieldSampler = std::function<GravField(const Vec3&)>;

/// Ray position with its unit wave vector and unit polarization.
struct RayState {
  Vec3 position = Vec3::Zero();
  Vec3 khat = Vec3::UnitZ();
  Vec3 fhat = Vec3::UnitX();
  double lambda = 0.0;

  /// Throws DomainError unless |khat| = |fhat| = 1 and khat.fhat = 0 (1e-10).
  void validate() const;
};

struct SpinningBody {
  double mass;             // kg
  double angularMomentum;  // kg m^2/s
  Vec3 spinAxis = Vec3::UnitZ();

  static SpinningBody earth(const EarthParams& earth = EarthParams::standard());
  void validate() const;
};

/// Omega = 2 omega - (omega . khat) khat - E_g x k.
Vec3 rotationRate(const GravField& field, const Vec3& khat, const Vec3& k);

/// Integrates dk/dl = Omega x k, df/dl = Omega x f and dx/dl = k with
/// fixed-step RK4 from initial.lambda to lambdaEnd. The wave vector used in
/// Omega is khat itself (unit affine normalization).
RayState transportRay(const RayState& initial, const FieldSampler& field, double lambdaEnd,
                      int steps);

/// d(chi)/d(lambda) = omega . khat + frameTerm. The reference-frame term depends on
/// the chosen polarization basis and is supplied by the caller.
double phaseRate(const Vec3& omega, const Vec3& khat, double frameTerm);

/// Rotation along an outgoing principal null geodesic of the Kerr field:
///   sin(dchi) = -(J/(M c)) (1/r1 - 1/r2) cos(theta).
/// r2 may be +infinity.
double kerrPrincipalNullRotation(const SpinningBody& body, double r1, double r2,
                                 double theta);

/// Photon launched along the spin axis with impact parameter s:
///   sin(chi) = 4 G J / (s^2 c^3), sign flipped for antiparallel launch.
double axialImpactRotation(const SpinningBody& body, double impactParameter, bool parallel);

/// Gauge-independent phase for the two-pass closed path:
///   dchi = (4 G J / c^3) (1/s1^2 - 1/s2^2).
double closedPathRotation(const SpinningBody& body, double s1, double s2);

}  // namespace relsat
