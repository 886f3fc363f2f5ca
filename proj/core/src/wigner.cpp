#include "relsat/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kDecompositionTolerance = 1e-10;

double wrapToPi(double angle) {
  // Map to (-pi, pi].
  double a = std::remainder(angle, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

}  // namespace

LorentzMatrix standardRotation(const Vec3& khat, StandardRotationConvention convention) {
  const double n = khat.norm();
  if (!(n > 0.0)) throw DomainError("standardRotation: zero direction");
  if (std::abs(n - 1.0) > kUnitTolerance) {
    throw DomainError("standardRotation: direction must be a unit vector");
  }
  const double theta = std::acos(std::clamp(khat.z(), -1.0, 1.0));
  // At the poles the azimuth is undefined; phi = 0 by convention.
  const double rho = std::hypot(khat.x(), khat.y());
  const double phi = rho > 0.0 ? std::atan2(khat.y(), khat.x()) : 0.0;
  LorentzMatrix r = LorentzMatrix::rotationZ(phi) * LorentzMatrix::rotationY(theta);
  if (convention == StandardRotationConvention::MinimalAxis) {
    r = r * LorentzMatrix::rotationZ(-phi);
  }
  return r;
}

LorentzMatrix standardTransform(const FourMomentum& k, StandardRotationConvention convention) {
  return standardRotation(k.direction(), convention) *
         LorentzMatrix::boostZ(std::log(k.energy()));
}

LorentzMatrix littleGroupElement(const LorentzMatrix& lambda, const FourMomentum& p,
                                 StandardRotationConvention convention) {
  const Vec4 q = lambda * p.vector();
  if (!(q(0) > 0.0)) throw DomainError("wignerAngle: transformed energy is not positive");
  const FourMomentum lp = lambda * p;
  return standardTransform(lp, convention).inverse() * lambda *
         standardTransform(p, convention);
}

double wignerAngle(const LorentzMatrix& lambda, const FourMomentum& p,
                   StandardRotationConvention convention) {
  const LorentzMatrix w = littleGroupElement(lambda, p, convention);
  const Vec4 kR(1.0, 0.0, 0.0, 1.0);
  const double scale = std::max(1.0, w.matrix().cwiseAbs().maxCoeff());
  if ((w * kR - kR).cwiseAbs().maxCoeff() > kDecompositionTolerance * scale) {
    throw DomainError("wignerAngle: little-group element does not fix k_R");
  }
  // S(b, g) only adds multiples of k_R to transverse vectors, so the x-y
  // block of W is exactly Rz(xi).
  const Eigen::Matrix2d block = w.matrix().block<2, 2>(1, 1);
  const Eigen::Matrix2d defect = block.transpose() * block - Eigen::Matrix2d::Identity();
  if (defect.cwiseAbs().maxCoeff() > kDecompositionTolerance * scale ||
      block.determinant() < 0.0) {
    throw DomainError("wignerAngle: transverse block is not a rotation");
  }
  return wrapToPi(std::atan2(block(1, 0), block(0, 0)));
}

double firstOrderBoostPhase(double theta, double phi, double thetaB, double phiB,
                            double speed) {
  if (theta < 0.0 || theta > kPi / 2.0) {
    throw DomainError("firstOrderBoostPhase: requires 0 <= theta <= pi/2");
  }
  if (!(std::abs(speed) < Constants::c)) {
    throw DomainError("firstOrderBoostPhase: speed must be below c");
  }
  return -0.5 * std::tan(0.5 * theta) * std::sin(thetaB) * std::sin(phi - phiB) *
         (speed / Constants::c);
}

double diffractionTransform(double theta, double speed) {
  if (theta < 0.0) throw DomainError("diffractionTransform: theta must be non-negative");
  const double beta = speed / Constants::c;
  if (!(std::abs(beta) < 1.0)) throw DomainError("diffractionTransform: |v| must be below c");
  return theta * std::sqrt((1.0 + beta) / (1.0 - beta));
}

PolarizationTriad::PolarizationTriad(const Vec3& eps1, const Vec3& eps2, const Vec3& khat)
    : e1_(eps1), e2_(eps2), k_(khat) {
  const double worst = std::max({std::abs(e1_.norm() - 1.0), std::abs(e2_.norm() - 1.0),
                                 std::abs(k_.norm() - 1.0), std::abs(e1_.dot(e2_)),
                                 std::abs(e1_.dot(k_)), std::abs(e2_.dot(k_)),
                                 (e1_.cross(e2_) - k_).cwiseAbs().maxCoeff()});
  if (worst > kUnitTolerance) {
    throw DomainError("PolarizationTriad: vectors are not a right-handed orthonormal triad");
  }
}

PolarizationTriad PolarizationTriad::standard(const Vec3& khat,
                                              StandardRotationConvention convention) {
  const Mat3 r = standardRotation(khat, convention).matrix().block<3, 3>(1, 1);
  return PolarizationTriad(r.col(0), r.col(1), r.col(2));
}

Eigen::Vector3cd PolarizationTriad::circular(int helicity) const {
  if (helicity != 1 && helicity != -1) throw DomainError("helicity must be +1 or -1");
  const Complex i(0.0, static_cast<double>(helicity));
  return (e1_.cast<Complex>() + i * e2_.cast<Complex>()) / std::sqrt(2.0);
}

HelicityState::HelicityState(Complex plus, Complex minus) : plus_(plus), minus_(minus) {
  const double norm = std::norm(plus_) + std::norm(minus_);
  if (std::abs(norm - 1.0) > kUnitTolerance) {
    throw DomainError("HelicityState: amplitudes must be normalized");
  }
}

TwoPhotonState::TwoPhotonState(const std::array<Complex, 4>& amplitudes) : a_(amplitudes) {
  double norm = 0.0;
  for (const Complex& z : a_) norm += std::norm(z);
  if (std::abs(norm - 1.0) > kUnitTolerance) {
    throw DomainError("TwoPhotonState: amplitudes must be normalized");
  }
}

HelicityState applyHelicityPhase(const HelicityState& state, double chi) {
  return HelicityState(state.plus() * std::polar(1.0, chi),
                       state.minus() * std::polar(1.0, -chi));
}

TwoPhotonState applyHelicityPhase(const TwoPhotonState& state, double chi, Photon which) {
  const double first = which == Photon::Second ? 0.0 : chi;
  const double second = which == Photon::First ? 0.0 : chi;
  // Basis order ++, +-, -+, --; sigma = +1 for '+'.
  constexpr int kSigmaFirst[4] = {1, 1, -1, -1};
  constexpr int kSigmaSecond[4] = {1, -1, 1, -1};
  std::array<Complex, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double phase = kSigmaFirst[i] * first + kSigmaSecond[i] * second;
    out[i] = state[i] * std::polar(1.0, phase);
  }
  return TwoPhotonState(out);
}

double concurrence(const TwoPhotonState& state) {
  return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

double fidelityAmplitude(const TwoPhotonState& a, const TwoPhotonState& b) {
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(a[i]) * b[i];
  return std::abs(overlap);
}

}  // namespace relsat
