#pragma once

#include <Eigen/Dense>

namespace relsat {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Proper orthochronous Lorentz transformation on (t, x, y, z), c = 1.
///
/// Construction validates metric preservation (|M^T eta M - eta| < 1e-10),
/// det M = +1 and M(0,0) >= 1.
class LorentzMatrix {
 public:
  LorentzMatrix();  // identity
  explicit LorentzMatrix(const Mat4& m);

  static LorentzMatrix identity() { return LorentzMatrix(); }
  /// Embed a 3x3 proper rotation into the spatial block.
  static LorentzMatrix rotation(const Mat3& r);
  static LorentzMatrix rotationX(double angle);
  static LorentzMatrix rotationY(double angle);
  static LorentzMatrix rotationZ(double angle);
  /// Rotation by `angle` about the unit axis `axis` (right-handed).
  static LorentzMatrix rotationAbout(const Vec3& axis, double angle);
  /// Pure boost along z with the given rapidity.
  static LorentzMatrix boostZ(double rapidity);
  /// Active pure boost: maps the rest four-velocity (1,0,0,0) to
  /// gamma*(1, beta). Coordinates seen from a frame moving with velocity
  /// v are obtained with boost(-v/c).
  static LorentzMatrix boost(const Vec3& beta);

  const Mat4& matrix() const { return m_; }
  double operator()(int row, int col) const { return m_(row, col); }

  LorentzMatrix operator*(const LorentzMatrix& other) const;
  Vec4 operator*(const Vec4& v) const { return m_ * v; }

  LorentzMatrix inverse() const;  // eta M^T eta

  /// Largest |M^T eta M - eta| entry.
  double metricDefect() const;

 private:
  struct Unchecked {};
  LorentzMatrix(const Mat4& m, Unchecked) : m_(m) {}

  Mat4 m_;
};

const Mat4& minkowskiMetric();

/// Minkowski product with signature (+,-,-,-).
double minkowskiDot(const Vec4& a, const Vec4& b);

/// Photon four-momentum (c = 1). Must be null with positive energy.
class FourMomentum {
 public:
  FourMomentum(double energy, const Vec3& k);
  static FourMomentum fromVector(const Vec4& v);
  /// Unit-energy photon travelling along `direction`.
  static FourMomentum photon(const Vec3& direction, double energy = 1.0);

  double energy() const { return e_; }
  const Vec3& spatial() const { return k_; }
  Vec3 direction() const { return k_ / k_.norm(); }
  Vec4 vector() const { return {e_, k_.x(), k_.y(), k_.z()}; }

 private:
  double e_;
  Vec3 k_;
};

FourMomentum operator*(const LorentzMatrix& lambda, const FourMomentum& p);

}  // namespace relsat
