#pragma once

#include <stdexcept>
#include <string>

namespace prdim {

// Shape mismatch between vectors/matrices or malformed input data.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (order, prime, degree, exhaustive search) was exceeded.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Input is outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An object failed validation while being constructed or parsed.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Always indicates a bug, never bad input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prdim
