#pragma once

#include <stdexcept>
#include <string>

namespace relsat {

// Input violates a physical precondition (speed >= c, r <= 0, ...).
// Callers get std::domain_error directly; this alias exists for readability.
using DomainError = std::domain_error;

/// Bad configuration: unknown unit tag, unparseable scenario, invalid field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation could not produce a finite, converged result.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relsat
