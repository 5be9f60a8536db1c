#pragma once
#include <stdexcept>
#include <string>

namespace braided {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// operations mixing scalars from different coefficient fields
struct FieldMismatchError : Error {
  using Error::Error;
};

// division by zero, non-invertible element, empty solve, bad argument range
struct DomainError : Error {
  using Error::Error;
};

// domain/codomain or grading mismatches in categorical operations
struct ShapeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace braided
