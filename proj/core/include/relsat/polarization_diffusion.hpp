#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace relsat {

using Complex = std::complex<double>;

/// Probability density on the linear-polarization equator, stored as Fourier
/// coefficients rho_m = integral rho(beta) exp(-i m beta) dbeta for 0 <= m <= M
/// (rho_{-m} = conj(rho_m), rho_0 = 1).
class CircleDensity {
 public:
  static constexpr int kDefaultModes = 256;
  /// Grid values may dip this far below zero from spectral ringing.
  static constexpr double kNegativeTolerance = 1e-9;

  static CircleDensity uniform(int modes = kDefaultModes);
  /// Coefficients for m = 0..M. Requires rho_0 = 1 within 1e-9.
  static CircleDensity fromCoefficients(std::vector<Complex> coefficients);
  /// Samples at beta_j = 2 pi j / N. Must be non-negative (within tolerance) and
  /// integrate to 1 within 1e-9. Modes above (N-1)/2 are not resolved by the grid.
  static CircleDensity fromGrid(std::span<const double> values, int modes = kDefaultModes);
  /// Wrapped normal with the given mean direction and width (closed-form coefficients).
  static CircleDensity wrappedGaussian(double mean, double sigma, int modes = kDefaultModes);

  int modes() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// rho_m for any integer m (zero beyond the cutoff).
  Complex coefficient(int m) const;
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  /// Raw values on N uniform points (N >= 2M+1 avoids aliasing).
  std::vector<double> sample(int points) const;
  /// Values on N points with ringing in [-1e-9, 0) clamped and the result
  /// renormalized. Throws NumericError for larger negative excursions.
  std::vector<double> toGrid(int points) const;
  double value(double beta) const;

  /// <exp(i beta)>.
  Complex meanPhasor() const;
  double circularMean() const;

  /// Density rho(beta - angle).
  CircleDensity rotated(double angle) const;

 private:
  explicit CircleDensity(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<Complex> coeffs_;
};

/// Diffusion constant c and drift constant d of
/// d(rho)/d(lambda) = c rho'' - d rho'.
struct DiffusionParams {
  double cDiff = 0.0;
  double dDrift = 0.0;

  void validate() const;  // cDiff >= 0
};

/// Exact spectral solution on the equator:
/// rho_m(lambda) = rho_m(0) exp(-c m^2 lambda - i m d lambda).
CircleDensity evolveEquator(const CircleDensity& rho0, const DiffusionParams& params,
                            double lambdaSpan);

/// Lorentz-invariant diffusion on the full Bloch sphere. All samplers take
/// the polar angle only; tensor components are in the orthonormal
/// (theta-hat, beta-hat) frame.
struct BlochTensorModel {
  std::function<Eigen::Matrix2d(double)> kTensor;
  std::function<Eigen::Vector2d(double)> uVector;
  std::function<double(double)> densityOfStates;

  /// Checks symmetry, K eigenvalues >= -1e-12 and n > 0 on `samples` polar angles.
  void validate(int samples = 64) const;
  static BlochTensorModel constant(double kThetaTheta, double kBetaBeta, double uTheta,
                                   double uBeta);
};

/// Equator restriction: c = K^{beta beta}(pi/2), d = u^beta(pi/2).
DiffusionParams restrictToEquator(const BlochTensorModel& model);

/// Azimuth-dependent coefficients for d(rho)/d(lambda) = (c(beta) rho' - d(beta) rho)'.
/// A Lorentz-invariant model never produces these; they exist to exercise the
/// equivariance witness with deliberately broken symmetry.
struct EquatorGenerator {
  std::function<double(double)> diffusion;
  std::function<double(double)> drift;

  static EquatorGenerator constant(const DiffusionParams& params);
};

/// Pseudo-spectral method-of-lines evolution (RK4) for a general generator.
CircleDensity evolveEquatorGeneral(const CircleDensity& rho0, const EquatorGenerator& generator,
                                   double lambdaSpan);

/// L1 distance between rotate(evolve(rho0)) and evolve(rotate(rho0)).
double equivarianceDeviation(const EquatorGenerator& generator, const CircleDensity& rho0,
                             double rotation, double lambdaSpan);

/// Equivariance witness for a tensor model (restricted to the equator).
double equivarianceCheck(const BlochTensorModel& model, const CircleDensity& rho0,
                         double rotation, double lambdaSpan);

/// L1 distance between two densities evaluated on `points` grid points.
double l1Distance(const CircleDensity& a, const CircleDensity& b, int points = 0);

/// Affine parameter t / (h nu) in s/J.
double affineParameter(double t, double nu);

struct EffectiveRates {
  double diffusion;  // c / nu
  double drift;      // d / nu
};
EffectiveRates effectiveRates(const DiffusionParams& params, double nu);

/// chi = t d / nu.
double angleShift(double t, double nu, double dDrift);
/// mu = 4 t c / nu; the degree of polarization scales as exp(-mu).
double polarizationDecay(double t, double nu, double cDiff);

/// Inversions of angleShift / polarizationDecay for bounding c and d.
double driftBound(double chiBound, double t, double nu);
double diffusionBound(double muBound, double t, double nu);

/// Propagation time and frequency used to turn observed bounds on chi and mu
/// into bounds on d and c.
struct CmbEpoch {
  double time = 4.35e17;       // s
  double frequency = 1.6e11;   // Hz
  double chiBound = 0.1;
  double muBound = 0.025;
};

struct StokesLinear {
  double q = 0.0;
  double u = 0.0;
};

struct StokesPolar {
  std::optional<double> angle;  // atan2(U, Q); empty when Q = U = 0
  double degree = 0.0;          // sqrt(Q^2 + U^2)
};

StokesPolar stokesAngle(const StokesLinear& s);

}  // namespace relsat
