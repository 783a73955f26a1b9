#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invsem {

struct InvsemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closure enumeration grew past the configured element cap.
struct CapExceeded : InvsemError {
  CapExceeded(std::size_t partial, std::size_t cap)
      : InvsemError("closure exceeded cap " + std::to_string(cap) +
                    " (partial closure size " + std::to_string(partial) + ")"),
        partial_size(partial),
        cap(cap) {}
  std::size_t partial_size;
  std::size_t cap;
};

struct UniverseMismatch : InvsemError {
  using InvsemError::InvsemError;
};

/// An affine map specification whose stated domain contains points where the
/// slope denominator does not divide a*n+b.
struct NonIntegralComposition : InvsemError {
  using InvsemError::InvsemError;
};

struct ClosureRequired : InvsemError {
  using InvsemError::InvsemError;
};

struct InvalidWitness : InvsemError {
  using InvsemError::InvsemError;
};

struct InvalidInput : InvsemError {
  using InvsemError::InvsemError;
};

struct NotMinimal : InvsemError {
  using InvsemError::InvsemError;
};

struct NotRegular : InvsemError {
  using InvsemError::InvsemError;
};

struct IterationCapExceeded : InvsemError {
  using InvsemError::InvsemError;
};

struct PigeonholeFailed : InvsemError {
  using InvsemError::InvsemError;
};

struct PreconditionViolated : InvsemError {
  using InvsemError::InvsemError;
};

struct ZeroSubspace : InvsemError {
  using InvsemError::InvsemError;
};

struct BoundaryContamination : InvsemError {
  using InvsemError::InvsemError;
};

struct ClassConditionUnmet : InvsemError {
  using InvsemError::InvsemError;
};

}  // namespace invsem
