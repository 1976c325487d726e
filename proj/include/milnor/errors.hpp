// Exception hierarchy shared by all milnor modules.
#ifndef MILNOR_ERRORS_HPP
#define MILNOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text; position() is the byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"), pos_(position) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// Operands belong to rings of different ambient dimension.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// The input is not a germ: f(0) != 0.
class GermInvalid : public Error {
public:
  using Error::Error;
};

/// The Jacobian ideal has infinite codimension (staircase is infinite).
class NotIsolated : public Error {
public:
  using Error::Error;
};

/// The degree safety valve of the standard-basis engine was hit.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// The brute-force dimension did not stabilize below the hard cap.
class OracleInconclusive : public Error {
public:
  using Error::Error;
};

/// Every coordinate character is trivial; no non-fixed points exist.
class TrivialAction : public Error {
public:
  using Error::Error;
};

/// The germ is not invariant under the supplied action.
class NotInvariant : public Error {
public:
  using Error::Error;
};

/// The group order is not prime (Chulkov specialization only).
class NotPrimeOrder : public Error {
public:
  using Error::Error;
};

/// No coordinate character is trivial; nothing to reduce.
class NoFixedCharacters : public Error {
public:
  using Error::Error;
};

/// mu(f) exceeds the configured doubling cap.
class DoublingCapExceeded : public Error {
public:
  using Error::Error;
};

/// An enumeration cap (group size, subset loop, sweep size) was exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed job file.
class JobError : public Error {
public:
  using Error::Error;
};

}  // namespace milnor

#endif
