#pragma once

#include <stdexcept>
#include <string>

namespace tcas {

// Argument outside the documented range (bad n, k, slot index, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Index kind / variance / signature mismatch.
struct TypeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Wrong number of slots for an operation.
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A caller-side precondition on values (not shapes) was violated.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// An internal consistency check failed: two independent routes disagree.
struct EngineDefect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tcas
