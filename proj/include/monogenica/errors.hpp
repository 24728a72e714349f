#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monogenica {

/// Root of the library's exception hierarchy. Every error raised by the
/// library derives from this type, so callers can catch it once.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis index, polynomial degree or column lies outside its admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of an operation
/// (|t| > 1, division by the zero quaternion, non-positive radius, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at the singular point of an outer function or kernel.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the given input kind.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The primitive of an outer diagonal element does not lie in the basis.
class NoPrimitiveError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace monogenica
