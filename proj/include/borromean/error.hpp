#pragma once

#include <stdexcept>
#include <string>

namespace borromean {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data (tables, files, parameters) failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Invalid numeric parameters to a constructor such as pq_group.
class ParameterError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed cyclotomic literal; `position` is the byte offset of the problem.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A centralizer whose projective characters cannot be produced without
/// an externally supplied table.
class UnsupportedCentralizer : public Error {
 public:
  using Error::Error;
};

/// A 2-cocycle that is not a coboundary at any attempted modulus.
class UnsolvableCoboundary : public Error {
 public:
  using Error::Error;
};

/// A fast-path formula was requested where its structural preconditions
/// do not hold.
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A formula produced a value outside its algebraic domain. Never raised on
/// valid input unless a formula has been transcribed incorrectly.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace borromean
