#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace relsat {

/// Analyzer angles (rad) for one CHSH setting pair.
struct SettingPair {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Setting pairs in the order (a,b), (a,b'), (a',b), (a',b').
using ChshSettings = std::array<SettingPair, 4>;

/// a = 0, a' = pi/4, b = pi/8, b' = 3pi/8.
ChshSettings standardChshSettings();

struct OutcomeCounts {
  std::uint64_t pp = 0;  // ++
  std::uint64_t pm = 0;  // +-
  std::uint64_t mp = 0;  // -+
  std::uint64_t mm = 0;  // --

  std::uint64_t total() const { return pp + pm + mp + mm; }
  bool operator==(const OutcomeCounts&) const = default;
};

struct CoincidenceCounts {
  std::array<OutcomeCounts, 4> perSetting{};
  bool operator==(const CoincidenceCounts&) const = default;
};

struct ChshResult {
  std::array<double, 4> correlations{};
  double sValue = 0.0;           // |E1 - E2 + E3 + E4|
  double sigma = 0.0;            // Poisson-propagated standard error
  double nSigmaViolation = 0.0;  // (S - 2)/sigma, one-sided
};

/// Ideal correlation for the singlet-like source, -v cos 2(alpha - beta).
double singletCorrelation(double visibility, const SettingPair& s);

/// Smallest integer N with N > 36 (1 - V^2/2) / (sqrt2 V - 1)^2, the photon
/// count for a 3-sigma CHSH violation. Throws DomainError for V <= 1/sqrt2 and
/// std::overflow_error when N would exceed 2^53.
std::uint64_t requiredPhotons(double visibility);

/// Correlations and S from counts; each count's variance is taken equal to the
/// count. Throws DomainError when the settings are not in CHSH order or the
/// counts cannot support an estimate.
ChshResult chshEstimate(const CoincidenceCounts& counts, const ChshSettings& settings);

/// Monte Carlo coincidences: pair i uses setting i mod 4, outcome A is a fair
/// coin and B agrees with probability (1 + E)/2. The pair range is split into
/// `workers` contiguous blocks, each with its own seeded stream, so results
/// depend only on (seed, workers).
CoincidenceCounts simulateCoincidences(double visibility, std::uint64_t nPairs,
                                       const ChshSettings& settings, std::uint64_t seed,
                                       unsigned workers = 1);

/// RFC 4180 CSV, LF line endings, columns
/// setting,alpha,beta,n_pp,n_pm,n_mp,n_mm.
void writeCountsCsv(std::ostream& os, const CoincidenceCounts& counts,
                    const ChshSettings& settings);

struct RequiredPhotonsPoint {
  double visibility;
  std::uint64_t photons;
};

/// N(V) on `points` visibilities evenly spaced in [vMin, vMax] (all > 1/sqrt2).
std::vector<RequiredPhotonsPoint> requiredPhotonsCurve(double vMin, double vMax, int points);
void writeRequiredPhotonsCsv(std::ostream& os, const std::vector<RequiredPhotonsPoint>& curve);

}  // namespace relsat
