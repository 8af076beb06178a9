#ifndef NAGAOLAB_ERROR_HPP_
#define NAGAOLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nagaolab {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operands live over different coefficient rings (e.g. Z[t] vs F_3[t], or
  // F_2 vs F_5).
  class RingMismatch : public Error {
   public:
    using Error::Error;
  };

  // A precondition on the mathematical domain failed: division by zero, a
  // non-unit where a unit is required, a modulus that is not prime, ...
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // The matrix was required to have determinant 1 and does not.
  class NotSpecialLinear : public DomainError {
   public:
    using DomainError::DomainError;
  };

  // A letter of a word fails the membership test of the factor it is
  // tagged with.
  class InvalidLetter : public DomainError {
   public:
    using DomainError::DomainError;
  };

  // The request is well formed but deliberately outside what this library
  // computes.
  class Unsupported : public Error {
   public:
    using Error::Error;
  };

  // A configured resource bound (search space, degree cap, range cap) would
  // be exceeded.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // Two independent computations of the same object disagree. This always
  // indicates a bug, never bad input.
  class InternalInconsistency : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

}  // namespace nagaolab

#endif  // NAGAOLAB_ERROR_HPP_
