#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "relsat/errors.hpp"
#include "relsat/scenario.hpp"
#include "relsat/units.hpp"

namespace relsat {

struct EffectEntry {
  std::string effect;
  double value = 0.0;
  Unit unit = Unit::Dimensionless;
  std::string paperRef;
};

struct EffectReport {
  std::vector<EffectEntry> entries;

  /// nullptr when absent.
  const EffectEntry* find(const std::string& effect) const;
};

/// Raised when one effect fails to produce a finite value.
class EffectError : public NumericError {
 public:
  EffectError(std::string effect, const std::string& what)
      : NumericError("effect '" + effect + "': " + what), effect_(std::move(effect)) {}
  const std::string& effect() const { return effect_; }

 private:
  std::string effect_;
};

/// Evaluates every enabled effect group. Each value is the direct result of the
/// corresponding library call. Throws EffectError.
EffectReport runReport(const Scenario& scenario);

/// Literature reference attached to an effect name; empty when uncatalogued.
const std::string& effectReference(const std::string& effect);
std::vector<std::string> catalogedEffects();

/// CSV with header effect,value,unit,paper_ref.
void writeReportCsv(std::ostream& os, const EffectReport& report);
/// Aligned human-readable table.
void writeReportTable(std::ostream& os, const EffectReport& report);

}  // namespace relsat
