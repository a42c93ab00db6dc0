#pragma once

#include <stdexcept>
#include <string>

namespace allspeed {

enum class FailureKind {
  non_positive_density,
  non_positive_pressure,
  non_finite_state,
  non_positive_denominator,
  non_positive_intermediate_density,
};

const char* to_string(FailureKind kind);

/// A scheme produced an inadmissible state. Carries the offending cell or
/// edge index when one is known.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(FailureKind kind, const std::string& what, int i = -1, int j = -1)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), i_(i), j_(j) {}

  FailureKind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }

  /// Denominator-type failures are cured by a smaller time step.
  bool retryable() const {
    return kind_ == FailureKind::non_positive_denominator ||
           kind_ == FailureKind::non_positive_intermediate_density;
  }

 private:
  FailureKind kind_;
  int i_;
  int j_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::non_positive_density: return "NonPositiveDensity";
    case FailureKind::non_positive_pressure: return "NonPositivePressure";
    case FailureKind::non_finite_state: return "NonFiniteState";
    case FailureKind::non_positive_denominator: return "NonPositiveDenominator";
    case FailureKind::non_positive_intermediate_density: return "NonPositiveIntermediateDensity";
  }
  return "Unknown";
}

}  // namespace allspeed
