#include "relsat/polarization_diffusion.hpp"

#include <unsupported/Eigen/FFT>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

namespace {

constexpr double kNormTolerance = 1e-9;

using Spectrum = std::vector<Complex>;

int wrapIndex(int m, int n) { return ((m % n) + n) % n; }

// Full two-sided spectrum of length n from non-negative-mode coefficients.
Spectrum toFullSpectrum(const std::vector<Complex>& coeffs, int n) {
  Spectrum full(static_cast<std::size_t>(n), Complex(0.0, 0.0));
  const int modes = static_cast<int>(coeffs.size()) - 1;
  full[0] += coeffs[0];
  for (int m = 1; m <= modes; ++m) {
    full[static_cast<std::size_t>(wrapIndex(m, n))] += coeffs[static_cast<std::size_t>(m)];
    full[static_cast<std::size_t>(wrapIndex(-m, n))] +=
        std::conj(coeffs[static_cast<std::size_t>(m)]);
  }
  return full;
}

// Grid values rho(beta_j) from a two-sided spectrum of coefficients rho_m.
std::vector<double> spectrumToGrid(const Spectrum& full) {
  const int n = static_cast<int>(full.size());
  Eigen::FFT<double> fft;
  Spectrum grid;
  fft.inv(grid, full);  // (1/n) sum_k X_k exp(+2 pi i j k / n)
  std::vector<double> out(grid.size());
  const double scale = n / kTwoPi;
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = grid[j].real() * scale;
  return out;
}

// Two-sided spectrum rho_m (length n) from real grid samples.
Spectrum gridToSpectrum(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  Spectrum in(values.begin(), values.end());
  Eigen::FFT<double> fft;
  Spectrum out;
  fft.fwd(out, in);
  const double h = kTwoPi / n;
  for (Complex& z : out) z *= h;
  return out;
}

std::vector<Complex> truncate(const Spectrum& full, int modes) {
  const int n = static_cast<int>(full.size());
  const int resolved = (n - 1) / 2;
  std::vector<Complex> coeffs(static_cast<std::size_t>(modes) + 1, Complex(0.0, 0.0));
  for (int m = 0; m <= std::min(modes, resolved); ++m) {
    coeffs[static_cast<std::size_t>(m)] = full[static_cast<std::size_t>(m)];
  }
  coeffs[0] = Complex(coeffs[0].real(), 0.0);
  return coeffs;
}

int defaultGridPoints(int modes) { return std::max(64, 4 * (modes + 1)); }

void checkModes(int modes) {
  if (modes < 1) throw DomainError("CircleDensity: need at least one Fourier mode");
}

}  // namespace

CircleDensity CircleDensity::uniform(int modes) {
  checkModes(modes);
  std::vector<Complex> c(static_cast<std::size_t>(modes) + 1, Complex(0.0, 0.0));
  c[0] = 1.0;
  return CircleDensity(std::move(c));
}

CircleDensity CircleDensity::fromCoefficients(std::vector<Complex> coefficients) {
  if (coefficients.size() < 2) throw DomainError("CircleDensity: need at least one mode");
  if (std::abs(coefficients[0] - Complex(1.0, 0.0)) > kNormTolerance) {
    throw DomainError("CircleDensity: zeroth coefficient must equal 1 (normalization)");
  }
  for (const Complex& z : coefficients) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("CircleDensity: non-finite coefficient");
    }
  }
  coefficients[0] = 1.0;
  return CircleDensity(std::move(coefficients));
}

CircleDensity CircleDensity::fromGrid(std::span<const double> values, int modes) {
  checkModes(modes);
  if (values.size() < 3) throw DomainError("CircleDensity: grid too small");
  const double h = kTwoPi / static_cast<double>(values.size());
  double integral = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("CircleDensity: non-finite grid value");
    if (v < -kNegativeTolerance) throw DomainError("CircleDensity: negative density");
    integral += v * h;
  }
  if (std::abs(integral - 1.0) > kNormTolerance) {
    throw DomainError("CircleDensity: grid density does not integrate to 1");
  }
  std::vector<Complex> coeffs =
      truncate(gridToSpectrum(std::vector<double>(values.begin(), values.end())), modes);
  coeffs[0] = 1.0;
  return CircleDensity(std::move(coeffs));
}

CircleDensity CircleDensity::wrappedGaussian(double mean, double sigma, int modes) {
  checkModes(modes);
  if (!(sigma > 0.0)) throw DomainError("wrappedGaussian: sigma must be positive");
  std::vector<Complex> c(static_cast<std::size_t>(modes) + 1);
  for (int m = 0; m <= modes; ++m) {
    c[static_cast<std::size_t>(m)] =
        std::polar(std::exp(-0.5 * m * m * sigma * sigma), -m * mean);
  }
  return CircleDensity(std::move(c));
}

Complex CircleDensity::coefficient(int m) const {
  const int am = std::abs(m);
  if (am > modes()) return {0.0, 0.0};
  const Complex z = coeffs_[static_cast<std::size_t>(am)];
  return m >= 0 ? z : std::conj(z);
}

std::vector<double> CircleDensity::sample(int points) const {
  if (points < 3) throw DomainError("CircleDensity: need at least 3 grid points");
  return spectrumToGrid(toFullSpectrum(coeffs_, points));
}

std::vector<double> CircleDensity::toGrid(int points) const {
  std::vector<double> v = sample(points);
  const double h = kTwoPi / points;
  double integral = 0.0;
  for (double& x : v) {
    if (x < -kNegativeTolerance) {
      throw NumericError("CircleDensity: spectral ringing below the negative tolerance");
    }
    x = std::max(x, 0.0);
    integral += x * h;
  }
  for (double& x : v) x /= integral;
  return v;
}

double CircleDensity::value(double beta) const {
  double sum = coeffs_[0].real();
  for (int m = 1; m <= modes(); ++m) {
    sum += 2.0 * (coeffs_[static_cast<std::size_t>(m)] * std::polar(1.0, m * beta)).real();
  }
  return sum / kTwoPi;
}

Complex CircleDensity::meanPhasor() const { return std::conj(coeffs_[1]); }

double CircleDensity::circularMean() const { return std::arg(meanPhasor()); }

CircleDensity CircleDensity::rotated(double angle) const {
  std::vector<Complex> c = coeffs_;
  for (int m = 1; m <= modes(); ++m) c[static_cast<std::size_t>(m)] *= std::polar(1.0, -m * angle);
  return CircleDensity(std::move(c));
}

void DiffusionParams::validate() const {
  if (!std::isfinite(cDiff) || !std::isfinite(dDrift)) {
    throw DomainError("DiffusionParams: non-finite parameters");
  }
  if (cDiff < 0.0) throw DomainError("DiffusionParams: negative diffusion (anti-diffusion)");
}

CircleDensity evolveEquator(const CircleDensity& rho0, const DiffusionParams& params,
                            double lambdaSpan) {
  params.validate();
  if (!(lambdaSpan >= 0.0)) throw DomainError("evolveEquator: span must be non-negative");
  std::vector<Complex> c = rho0.coefficients();
  for (int m = 1; m <= rho0.modes(); ++m) {
    const double dm = m;
    c[static_cast<std::size_t>(m)] *=
        std::exp(Complex(-params.cDiff * dm * dm * lambdaSpan, -dm * params.dDrift * lambdaSpan));
  }
  return CircleDensity::fromCoefficients(std::move(c));
}

void BlochTensorModel::validate(int samples) const {
  if (!kTensor || !uVector || !densityOfStates) {
    throw DomainError("BlochTensorModel: missing sampler");
  }
  for (int i = 0; i < samples; ++i) {
    const double theta = kPi * (i + 0.5) / samples;
    const Eigen::Matrix2d k = kTensor(theta);
    if (!k.allFinite() || std::abs(k(0, 1) - k(1, 0)) > 1e-12 * std::max(1.0, k.norm())) {
      throw DomainError("BlochTensorModel: K must be finite and symmetric");
    }
    const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(k).eigenvalues();
    if (ev.minCoeff() < -1e-12) throw DomainError("BlochTensorModel: K is not positive semidefinite");
    if (!uVector(theta).allFinite()) throw DomainError("BlochTensorModel: non-finite u");
    if (!(densityOfStates(theta) > 0.0)) {
      throw DomainError("BlochTensorModel: density of states must be positive");
    }
  }
}

BlochTensorModel BlochTensorModel::constant(double kThetaTheta, double kBetaBeta,
                                            double uTheta, double uBeta) {
  Eigen::Matrix2d k;
  k << kThetaTheta, 0.0, 0.0, kBetaBeta;
  const Eigen::Vector2d u(uTheta, uBeta);
  return {[k](double) { return k; }, [u](double) { return u; }, [](double) { return 1.0; }};
}

DiffusionParams restrictToEquator(const BlochTensorModel& model) {
  model.validate();
  const double equator = kPi / 2.0;
  DiffusionParams p{model.kTensor(equator)(1, 1), model.uVector(equator)(1)};
  p.validate();
  return p;
}

EquatorGenerator EquatorGenerator::constant(const DiffusionParams& params) {
  params.validate();
  const double c = params.cDiff;
  const double d = params.dDrift;
  return {[c](double) { return c; }, [d](double) { return d; }};
}

CircleDensity evolveEquatorGeneral(const CircleDensity& rho0, const EquatorGenerator& generator,
                                   double lambdaSpan) {
  if (!generator.diffusion || !generator.drift) {
    throw DomainError("EquatorGenerator: missing coefficient function");
  }
  if (!(lambdaSpan >= 0.0)) throw DomainError("evolveEquator: span must be non-negative");
  const int modes = rho0.modes();
  // 3M+ points keep the quadratic products free of aliasing into |m| <= M.
  const int n = 3 * modes + 3;
  const double h = kTwoPi / n;

  std::vector<double> cGrid(static_cast<std::size_t>(n)), dGrid(static_cast<std::size_t>(n));
  double cMax = 0.0, dMax = 0.0;
  for (int j = 0; j < n; ++j) {
    const double beta = j * h;
    cGrid[static_cast<std::size_t>(j)] = generator.diffusion(beta);
    dGrid[static_cast<std::size_t>(j)] = generator.drift(beta);
    if (!std::isfinite(cGrid[static_cast<std::size_t>(j)]) ||
        !std::isfinite(dGrid[static_cast<std::size_t>(j)])) {
      throw NumericError("EquatorGenerator: non-finite coefficient");
    }
    if (cGrid[static_cast<std::size_t>(j)] < 0.0) {
      throw DomainError("EquatorGenerator: negative diffusion");
    }
    cMax = std::max(cMax, cGrid[static_cast<std::size_t>(j)]);
    dMax = std::max(dMax, std::abs(dGrid[static_cast<std::size_t>(j)]));
  }
  if (lambdaSpan == 0.0) return rho0;

  Eigen::FFT<double> fft;
  // d rho_m / d lambda = i m F_m with flux F = c rho' - d rho.
  auto rhs = [&](const std::vector<Complex>& coeffs) {
    Spectrum full = toFullSpectrum(coeffs, n);
    Spectrum deriv(full.size());
    for (int k = 0; k < n; ++k) {
      const int m = k <= n / 2 ? k : k - n;
      deriv[static_cast<std::size_t>(k)] = Complex(0.0, m) * full[static_cast<std::size_t>(k)];
    }
    Spectrum rhoGrid, derivGrid;
    fft.inv(rhoGrid, full);
    fft.inv(derivGrid, deriv);
    Spectrum flux(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < flux.size(); ++j) {
      flux[j] = cGrid[j] * derivGrid[j].real() - dGrid[j] * rhoGrid[j].real();
    }
    Spectrum fluxHat;
    fft.fwd(fluxHat, flux);  // inv/fwd pair round-trips without extra scaling
    std::vector<Complex> out(coeffs.size());
    for (int m = 0; m <= modes; ++m) {
      out[static_cast<std::size_t>(m)] = Complex(0.0, m) * fluxHat[static_cast<std::size_t>(m)];
    }
    return out;
  };

  const double stiffness = cMax * modes * modes + dMax * modes;
  const int steps =
      std::max(1, static_cast<int>(std::ceil(lambdaSpan * stiffness / 1.0)));
  const double dt = lambdaSpan / steps;
  std::vector<Complex> y = rho0.coefficients();
  std::vector<Complex> tmp(y.size());
  auto axpy = [&](const std::vector<Complex>& k, double a) {
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + a * k[i];
    return tmp;
  };
  for (int s = 0; s < steps; ++s) {
    const auto k1 = rhs(y);
    const auto k2 = rhs(axpy(k1, 0.5 * dt));
    const auto k3 = rhs(axpy(k2, 0.5 * dt));
    const auto k4 = rhs(axpy(k3, dt));
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
  for (const Complex& z : y) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericError("evolveEquatorGeneral: integration diverged");
    }
  }
  return CircleDensity::fromCoefficients(std::move(y));
}

double equivarianceDeviation(const EquatorGenerator& generator, const CircleDensity& rho0,
                             double rotation, double lambdaSpan) {
  const CircleDensity evolveThenRotate =
      evolveEquatorGeneral(rho0, generator, lambdaSpan).rotated(rotation);
  const CircleDensity rotateThenEvolve =
      evolveEquatorGeneral(rho0.rotated(rotation), generator, lambdaSpan);
  return l1Distance(evolveThenRotate, rotateThenEvolve);
}

double equivarianceCheck(const BlochTensorModel& model, const CircleDensity& rho0,
                         double rotation, double lambdaSpan) {
  return equivarianceDeviation(EquatorGenerator::constant(restrictToEquator(model)), rho0,
                               rotation, lambdaSpan);
}

double l1Distance(const CircleDensity& a, const CircleDensity& b, int points) {
  if (points <= 0) points = defaultGridPoints(std::max(a.modes(), b.modes()));
  const std::vector<double> va = a.sample(points);
  const std::vector<double> vb = b.sample(points);
  double sum = 0.0;
  for (std::size_t j = 0; j < va.size(); ++j) sum += std::abs(va[j] - vb[j]);
  return sum * kTwoPi / points;
}

double affineParameter(double t, double nu) {
  if (!(nu > 0.0)) throw DomainError("affineParameter: frequency must be positive");
  return t / (Constants::h * nu);
}

EffectiveRates effectiveRates(const DiffusionParams& params, double nu) {
  params.validate();
  if (!(nu > 0.0)) throw DomainError("effectiveRates: frequency must be positive");
  return {params.cDiff / nu, params.dDrift / nu};
}

double angleShift(double t, double nu, double dDrift) {
  if (!(nu > 0.0)) throw DomainError("angleShift: frequency must be positive");
  return t * dDrift / nu;
}

double polarizationDecay(double t, double nu, double cDiff) {
  if (!(nu > 0.0)) throw DomainError("polarizationDecay: frequency must be positive");
  return 4.0 * t * cDiff / nu;
}

double driftBound(double chiBound, double t, double nu) {
  if (!(t > 0.0) || !(nu > 0.0)) throw DomainError("driftBound: t and nu must be positive");
  return chiBound * nu / t;
}

double diffusionBound(double muBound, double t, double nu) {
  if (!(t > 0.0) || !(nu > 0.0)) throw DomainError("diffusionBound: t and nu must be positive");
  return muBound * nu / (4.0 * t);
}

StokesPolar stokesAngle(const StokesLinear& s) {
  StokesPolar out;
  out.degree = std::hypot(s.q, s.u);
  if (s.q != 0.0 || s.u != 0.0) out.angle = std::atan2(s.u, s.q);
  return out;
}

}  // namespace relsat
