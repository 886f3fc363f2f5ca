#pragma once

#include <array>
#include <complex>

#include "relsat/lorentz.hpp"

namespace relsat {

/// How the standard rotation R(k) carries z onto the unit vector k.
enum class StandardRotationConvention {
  /// Rotate by theta about y, then by phi about z: R = Rz(phi) Ry(theta).
  YThenZ,
  /// Single rotation about z x k by theta: R = Rz(phi) Ry(theta) Rz(-phi).
  MinimalAxis,
};

/// Standard rotation taking the z axis to `khat` (|khat| = 1 within 1e-12).
LorentzMatrix standardRotation(const Vec3& khat,
                               StandardRotationConvention convention =
                                   StandardRotationConvention::YThenZ);

/// L(k) = R(khat) Bz(ln e): maps k_R = (1,0,0,1) to k.
LorentzMatrix standardTransform(const FourMomentum& k,
                                StandardRotationConvention convention =
                                    StandardRotationConvention::YThenZ);

/// The little-group element W = L^-1(lambda p) lambda L(p).
LorentzMatrix littleGroupElement(const LorentzMatrix& lambda, const FourMomentum& p,
                                 StandardRotationConvention convention =
                                     StandardRotationConvention::YThenZ);

/// Rotation angle xi in (-pi, pi] of W = S(b, g) Rz(xi). Helicity amplitudes
/// pick up exp(+-i xi). Throws DomainError if W does not fix k_R.
double wignerAngle(const LorentzMatrix& lambda, const FourMomentum& p,
                   StandardRotationConvention convention =
                       StandardRotationConvention::YThenZ);

/// Leading-order polarization phase for a pure boost of speed v (m/s) along
/// (thetaB, phiB), photon along (theta, phi) with 0 <= theta <= pi/2:
///   chi = -(1/2) tan(theta/2) sin(thetaB) sin(phi - phiB) v/c.
double firstOrderBoostPhase(double theta, double phi, double thetaB, double phiB,
                            double speed);

/// Diffraction angle seen by a detector moving with signed speed v along the beam.
double diffractionTransform(double theta, double speed);

/// Orthonormal real triad (eps1, eps2, khat) with eps1 x eps2 = khat.
class PolarizationTriad {
 public:
  PolarizationTriad(const Vec3& eps1, const Vec3& eps2, const Vec3& khat);
  /// Triad obtained by rotating (x, y, z) with the standard rotation for `khat`.
  static PolarizationTriad standard(const Vec3& khat,
                                    StandardRotationConvention convention =
                                        StandardRotationConvention::YThenZ);

  const Vec3& eps1() const { return e1_; }
  const Vec3& eps2() const { return e2_; }
  const Vec3& khat() const { return k_; }
  /// Circular basis vectors (eps1 +- i eps2)/sqrt(2).
  Eigen::Vector3cd circular(int helicity) const;

 private:
  Vec3 e1_, e2_, k_;
};

using Complex = std::complex<double>;

/// Single-photon helicity amplitudes, |a+|^2 + |a-|^2 = 1.
class HelicityState {
 public:
  HelicityState(Complex plus, Complex minus);
  Complex plus() const { return plus_; }
  Complex minus() const { return minus_; }

 private:
  Complex plus_, minus_;
};

/// Two-photon amplitudes over {++, +-, -+, --}, unit norm.
class TwoPhotonState {
 public:
  explicit TwoPhotonState(const std::array<Complex, 4>& amplitudes);
  const std::array<Complex, 4>& amplitudes() const { return a_; }
  Complex operator[](std::size_t i) const { return a_[i]; }

 private:
  std::array<Complex, 4> a_;
};

enum class Photon { First, Second, Both };

HelicityState applyHelicityPhase(const HelicityState& state, double chi);
TwoPhotonState applyHelicityPhase(const TwoPhotonState& state, double chi, Photon which);

/// Pure-state concurrence 2|a(++) a(--) - a(+-) a(-+)|.
double concurrence(const TwoPhotonState& state);

/// Overlap |<a|b>|; equals 1 iff the states are the same ray.
double fidelityAmplitude(const TwoPhotonState& a, const TwoPhotonState& b);

}  // namespace relsat
