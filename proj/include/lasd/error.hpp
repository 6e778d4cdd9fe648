#pragma once

#include <stdexcept>
#include <string>

namespace lasd {

/// Malformed or inconsistent data (empty samples, non-finite values, bad
/// grids, unparseable CSV).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid run configuration (alpha outside (0,1), too few observations for
/// the default tuning constants, unknown names).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value function failed one of its probe-grid property checks.
class PropertyViolation : public std::domain_error {
 public:
  PropertyViolation(std::string property, const std::string& detail)
      : std::domain_error(property + ": " + detail), property_(std::move(property)) {}

  const std::string& property() const noexcept { return property_; }

 private:
  std::string property_;
};

}  // namespace lasd
