#pragma once

#include <stdexcept>

namespace umbilic {

/// An operation was called with an argument outside its contract
/// (non-tangent vector, non-imaginary octonion, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A field was evaluated where it is not defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A scalar parameter (r, t, step size, sample count) is out of range.
class ParameterError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A multiplication table is not a well-formed set of Fano triples.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace umbilic
