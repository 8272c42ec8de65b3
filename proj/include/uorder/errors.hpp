#pragma once

#include <stdexcept>
#include <string>

namespace uorder {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
struct DimensionMismatch : Error {
  DimensionMismatch(int lhs, int rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// A spectrum point falls outside the domain of a scalar function.
struct DomainError : Error {
  DomainError(const std::string& what, double offending_value)
      : Error(what), offending(offending_value) {}
  double offending;
};

/// Matrix is singular or too ill-conditioned for the requested factorization.
struct SingularMatrixError : Error {
  using Error::Error;
};

/// A decomposition backend failed to converge or produced an invalid factor.
struct DecompositionError : Error {
  using Error::Error;
};

/// A domain type's construction invariant does not hold for the given data.
struct InvariantViolation : Error {
  using Error::Error;
};

/// No order witness exists; carries the violating eigenvalue index
/// (0-based, eigenvalues paired in descending order).
struct NoWitnessError : Error {
  NoWitnessError(int index, double margin)
      : Error("no witness: eigenvalue dominance fails at descending index " +
              std::to_string(index)),
        violation_index(index),
        violation_margin(margin) {}
  int violation_index;
  double violation_margin;
};

}  // namespace uorder
