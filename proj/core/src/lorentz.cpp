#include "relsat/lorentz.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <string>

#include "relsat/errors.hpp"

namespace relsat {

namespace {

constexpr double kMatrixTolerance = 1e-10;
constexpr double kNullTolerance = 1e-12;

}  // namespace

const Mat4& minkowskiMetric() {
  static const Mat4 eta = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return eta;
}

double minkowskiDot(const Vec4& a, const Vec4& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

LorentzMatrix::LorentzMatrix() : m_(Mat4::Identity()) {}

LorentzMatrix::LorentzMatrix(const Mat4& m) : m_(m) {
  if (!m_.allFinite()) throw DomainError("LorentzMatrix: non-finite entries");
  const double defect = metricDefect();
  if (defect > kMatrixTolerance * std::max(1.0, m_.cwiseAbs().maxCoeff() * m_.cwiseAbs().maxCoeff())) {
    throw DomainError("LorentzMatrix: does not preserve the Minkowski metric (defect " +
                      std::to_string(defect) + ")");
  }
  if (std::abs(m_.determinant() - 1.0) > kMatrixTolerance * std::max(1.0, std::pow(m_(0, 0), 4))) {
    throw DomainError("LorentzMatrix: determinant is not +1");
  }
  if (m_(0, 0) < 1.0 - kMatrixTolerance) {
    throw DomainError("LorentzMatrix: not orthochronous");
  }
}

LorentzMatrix LorentzMatrix::rotation(const Mat3& r) {
  Mat4 m = Mat4::Identity();
  m.block<3, 3>(1, 1) = r;
  return LorentzMatrix(m);
}

LorentzMatrix LorentzMatrix::rotationX(double angle) {
  return rotation(Eigen::AngleAxisd(angle, Vec3::UnitX()).toRotationMatrix());
}

LorentzMatrix LorentzMatrix::rotationY(double angle) {
  return rotation(Eigen::AngleAxisd(angle, Vec3::UnitY()).toRotationMatrix());
}

LorentzMatrix LorentzMatrix::rotationZ(double angle) {
  return rotation(Eigen::AngleAxisd(angle, Vec3::UnitZ()).toRotationMatrix());
}

LorentzMatrix LorentzMatrix::rotationAbout(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0)) throw DomainError("rotation axis must be non-zero");
  return rotation(Eigen::AngleAxisd(angle, axis / n).toRotationMatrix());
}

LorentzMatrix LorentzMatrix::boostZ(double rapidity) {
  Mat4 m = Mat4::Identity();
  m(0, 0) = m(3, 3) = std::cosh(rapidity);
  m(0, 3) = m(3, 0) = std::sinh(rapidity);
  return LorentzMatrix(m, Unchecked{});
}

LorentzMatrix LorentzMatrix::boost(const Vec3& beta) {
  const double b2 = beta.squaredNorm();
  if (!(b2 < 1.0)) throw DomainError("boost speed must be below c");
  Mat4 m = Mat4::Identity();
  if (b2 == 0.0) return LorentzMatrix(m, Unchecked{});
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  m(0, 0) = gamma;
  m.block<1, 3>(0, 1) = gamma * beta.transpose();
  m.block<3, 1>(1, 0) = gamma * beta;
  // (gamma - 1)/b2 = gamma^2/(gamma + 1) avoids cancellation for small beta.
  m.block<3, 3>(1, 1) += (gamma * gamma / (gamma + 1.0)) * beta * beta.transpose();
  return LorentzMatrix(m, Unchecked{});
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& other) const {
  return LorentzMatrix(m_ * other.m_, Unchecked{});
}

LorentzMatrix LorentzMatrix::inverse() const {
  const Mat4& eta = minkowskiMetric();
  return LorentzMatrix(eta * m_.transpose() * eta, Unchecked{});
}

double LorentzMatrix::metricDefect() const {
  const Mat4& eta = minkowskiMetric();
  return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
}

FourMomentum::FourMomentum(double energy, const Vec3& k) : e_(energy), k_(k) {
  if (!std::isfinite(energy) || !k.allFinite()) {
    throw DomainError("FourMomentum: non-finite components");
  }
  if (!(energy > 0.0)) throw DomainError("FourMomentum: energy must be positive");
  if (std::abs(energy - k.norm()) > kNullTolerance * energy) {
    throw DomainError("FourMomentum: photon momentum is not null");
  }
}

FourMomentum FourMomentum::fromVector(const Vec4& v) {
  return FourMomentum(v(0), v.tail<3>());
}

FourMomentum FourMomentum::photon(const Vec3& direction, double energy) {
  const double n = direction.norm();
  if (!(n > 0.0)) throw DomainError("photon direction must be non-zero");
  return FourMomentum(energy, direction * (energy / n));
}

FourMomentum operator*(const LorentzMatrix& lambda, const FourMomentum& p) {
  Vec4 q = lambda * p.vector();
  // Re-impose null-ness lost to rounding: energy from the transformed 3-momentum.
  return FourMomentum(q.tail<3>().norm(), q.tail<3>());
}

}  // namespace relsat
