#pragma once

#include <stdexcept>
#include <string>

namespace hankelggr {

// Rejected inputs: bad parameter combinations, domain violations.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A computation that started from valid inputs failed to produce a
// trustworthy result (divergence, iteration limits, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

// Loss of significance detected mid-construction, e.g. a recurrence
// coefficient that must be positive came out nonpositive.
class PrecisionFailure : public NumericalError {
 public:
  explicit PrecisionFailure(const std::string& what) : NumericalError(what) {}
};

}  // namespace hankelggr
