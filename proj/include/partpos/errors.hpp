#pragma once

#include <stdexcept>

namespace partpos {

// A family, rank or parameter outside its admissible range. The message
// names the violated constraint.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation asked for a type it does not support.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Mismatched vector lengths.
class StructuralError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace partpos
