#include "relsat/bell_stats.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "relsat/csv.hpp"
#include "relsat/errors.hpp"
#include "relsat/units.hpp"

namespace relsat {

namespace {

constexpr double kPhotonCap = 9007199254740992.0;  // 2^53

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// 53-bit uniform in [0, 1); independent of the standard library's distributions.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void simulateBlock(double visibility, std::uint64_t begin, std::uint64_t end,
                   const ChshSettings& settings, std::uint64_t streamSeed,
                   CoincidenceCounts& out) {
  std::mt19937_64 rng(streamSeed);
  std::array<double, 4> agree{};
  for (std::size_t s = 0; s < 4; ++s) {
    agree[s] = 0.5 * (1.0 + singletCorrelation(visibility, settings[s]));
  }
  for (std::uint64_t i = begin; i < end; ++i) {
    const std::size_t s = static_cast<std::size_t>(i % 4);
    const bool aPlus = uniform01(rng) < 0.5;
    const bool same = uniform01(rng) < agree[s];
    const bool bPlus = same ? aPlus : !aPlus;
    OutcomeCounts& c = out.perSetting[s];
    if (aPlus && bPlus) ++c.pp;
    else if (aPlus) ++c.pm;
    else if (bPlus) ++c.mp;
    else ++c.mm;
  }
}

}  // namespace

ChshSettings standardChshSettings() {
  const double a = 0.0, a2 = kPi / 4.0, b = kPi / 8.0, b2 = 3.0 * kPi / 8.0;
  return {SettingPair{a, b}, SettingPair{a, b2}, SettingPair{a2, b}, SettingPair{a2, b2}};
}

double singletCorrelation(double visibility, const SettingPair& s) {
  return -visibility * std::cos(2.0 * (s.alpha - s.beta));
}

std::uint64_t requiredPhotons(double visibility) {
  if (!(visibility <= 1.0)) throw DomainError("requiredPhotons: visibility must be <= 1");
  const double excess = std::sqrt(2.0) * visibility - 1.0;
  if (!(excess > 0.0)) {
    throw DomainError("requiredPhotons: no CHSH violation possible for V <= 1/sqrt(2)");
  }
  const double bound = 36.0 * (1.0 - 0.5 * visibility * visibility) / (excess * excess);
  if (!(bound < kPhotonCap)) {
    throw std::overflow_error("requiredPhotons: photon count diverges near V = 1/sqrt(2)");
  }
  return static_cast<std::uint64_t>(std::floor(bound)) + 1;
}

ChshResult chshEstimate(const CoincidenceCounts& counts, const ChshSettings& settings) {
  if (settings[0].alpha != settings[1].alpha || settings[2].alpha != settings[3].alpha ||
      settings[0].beta != settings[2].beta || settings[1].beta != settings[3].beta) {
    throw DomainError("chshEstimate: settings are not in (a,b),(a,b'),(a',b),(a',b') order");
  }
  ChshResult r;
  double variance = 0.0;
  for (std::size_t s = 0; s < 4; ++s) {
    const OutcomeCounts& c = counts.perSetting[s];
    const double n = static_cast<double>(c.total());
    if (!(n > 0.0)) throw DomainError("chshEstimate: setting with zero coincidences");
    const double same = static_cast<double>(c.pp + c.mm);
    const double diff = static_cast<double>(c.pm + c.mp);
    const double e = (same - diff) / n;
    r.correlations[s] = e;
    // dE/dN_same = (1 - E)/n, dE/dN_diff = -(1 + E)/n, Var(N) = N.
    variance += ((1.0 - e) * (1.0 - e) * same + (1.0 + e) * (1.0 + e) * diff) / (n * n);
  }
  const auto& e = r.correlations;
  r.sValue = std::abs(e[0] - e[1] + e[2] + e[3]);
  if (!(variance > 0.0)) throw DomainError("chshEstimate: zero propagated variance");
  r.sigma = std::sqrt(variance);
  r.nSigmaViolation = (r.sValue - 2.0) / r.sigma;
  return r;
}

CoincidenceCounts simulateCoincidences(double visibility, std::uint64_t nPairs,
                                       const ChshSettings& settings, std::uint64_t seed,
                                       unsigned workers) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw DomainError("simulateCoincidences: visibility must lie in [0, 1]");
  }
  if (nPairs == 0) throw DomainError("simulateCoincidences: need at least one pair");
  if (workers == 0) throw DomainError("simulateCoincidences: need at least one worker");
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, nPairs));

  std::vector<CoincidenceCounts> partial(workers);
  auto block = [&](unsigned w) {
    const std::uint64_t begin = nPairs * w / workers;
    const std::uint64_t end = nPairs * (w + 1) / workers;
    simulateBlock(visibility, begin, end, settings, splitmix64(seed ^ splitmix64(w)),
                  partial[w]);
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(block, w);
  }
  CoincidenceCounts total;
  for (const CoincidenceCounts& p : partial) {
    for (std::size_t s = 0; s < 4; ++s) {
      total.perSetting[s].pp += p.perSetting[s].pp;
      total.perSetting[s].pm += p.perSetting[s].pm;
      total.perSetting[s].mp += p.perSetting[s].mp;
      total.perSetting[s].mm += p.perSetting[s].mm;
    }
  }
  return total;
}

void writeCountsCsv(std::ostream& os, const CoincidenceCounts& counts,
                    const ChshSettings& settings) {
  CsvWriter csv(os);
  csv.row("setting", "alpha", "beta", "n_pp", "n_pm", "n_mp", "n_mm");
  for (std::size_t s = 0; s < 4; ++s) {
    const OutcomeCounts& c = counts.perSetting[s];
    csv.row(s, settings[s].alpha, settings[s].beta, c.pp, c.pm, c.mp, c.mm);
  }
}

std::vector<RequiredPhotonsPoint> requiredPhotonsCurve(double vMin, double vMax, int points) {
  if (points < 2) throw DomainError("requiredPhotonsCurve: need at least 2 points");
  if (!(vMin < vMax)) throw DomainError("requiredPhotonsCurve: need vMin < vMax");
  std::vector<RequiredPhotonsPoint> curve;
  curve.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double v = vMin + (vMax - vMin) * i / (points - 1);
    curve.push_back({v, requiredPhotons(v)});
  }
  return curve;
}

void writeRequiredPhotonsCsv(std::ostream& os, const std::vector<RequiredPhotonsPoint>& curve) {
  CsvWriter csv(os);
  csv.row("V", "N");
  for (const auto& p : curve) csv.row(p.visibility, p.photons);
}

}  // namespace relsat
