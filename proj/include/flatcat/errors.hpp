#pragma once

#include <stdexcept>
#include <string>

namespace flatcat {

// Input is well-formed but outside the mathematical domain of the operation
// (empty word, non-flattened word, odd composition sum, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Caller supplied an unknown name, a missing parameter, or a bad format.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured resource limit (the exhaustive-enumeration cap).
struct ResourceError : std::length_error {
  using std::length_error::length_error;
};

// Internal invariant broken; always a bug in this library.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace flatcat
