#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input structure: dangling vertex ids, broken arc involution.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Input outside the admissible domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Two independently computed quantities disagree beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
