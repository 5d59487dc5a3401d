#pragma once

#include <stdexcept>
#include <string>

namespace cfnum {

/// A mathematical precondition failed (non-delta series, c_0 not a square, λ = 0, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The caller combined arguments in a way the contract forbids (order mismatch,
/// unknown names, missing parameters, silent truncation).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The requested computation route does not apply to the given sequence.
struct UnsupportedRoute : UsageError {
  using UsageError::UsageError;
};

/// Two independent computations of the same quantity disagreed.
struct CrossCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cfnum
