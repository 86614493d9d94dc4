#pragma once

#include <stdexcept>
#include <string>

namespace nct {

/// Input is well-formed but outside the mathematical domain of an operation
/// (rational theta, composite prime, bad reduction, singular matrix, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text in one of the shared grammars (quad, matrix, curve, ...).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A postcondition the code checks on itself did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nct
