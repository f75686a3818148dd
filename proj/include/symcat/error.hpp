#pragma once

#include <stdexcept>
#include <string>

namespace symcat {

/// A precondition on a parameter or configuration value was violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not produce a trustworthy result (coarse grid,
/// zero-norm state, non-PSD density matrix, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested size exceeds the dense-oracle memory cap.
class CapacityError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace symcat
