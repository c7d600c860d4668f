#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monoideal {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values built over different variable contexts were combined.
struct ContextMismatchError : Error {
  using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// A configurable resource cap was exceeded.  Callers distinguish this
/// from a wrong answer: the computation was aborted, not completed.
struct ResourceError : Error {
  std::string resource;
  std::size_t cap;
  ResourceError(std::string res, std::size_t cap_value)
      : Error("resource cap exceeded: " + res + " (cap " +
              std::to_string(cap_value) + ")"),
        resource(std::move(res)),
        cap(cap_value) {}
};

/// Input text did not match the grammar.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int ln, int col, const std::string& msg)
      : Error("parse error at " + std::to_string(ln) + ":" +
              std::to_string(col) + ": " + msg),
        line(ln),
        column(col) {}
};

/// Exponent arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

/// Exponent type.  Arithmetic goes through the checked helpers below so
/// overflow can never silently wrap.
using Exp = std::int64_t;

inline Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in add");
  return r;
}

inline Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in mul");
  return r;
}

}  // namespace monoideal
