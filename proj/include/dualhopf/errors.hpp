#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dualhopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A composition entry violates the sign constraint of its sector.
class SignConstraintError : public Error {
 public:
  using Error::Error;
};

/// Operands from different spaces (GE1 vs LE0, primal vs dual) were combined.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operator was applied outside the domain on which it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dualhopf
