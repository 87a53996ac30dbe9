#pragma once

#include <stdexcept>
#include <string>

namespace densepts {

/// A geometric hypothesis of a construction does not hold for the given input
/// (hyperplanes not in general position, tangency, a line inside the divisor, ...).
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic domain violation: valuation of zero, non-prime place, zero denominator.
class ArithmeticError : public std::domain_error {
 public:
  explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

/// Shape mismatch between geometric objects (ambient dimension, degree, arity).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace densepts
