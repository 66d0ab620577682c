#pragma once

#include <stdexcept>
#include <string>

namespace divgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A request exceeded a configured size guard. The CLI maps this to exit code 3.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An exact verification that must never fail did fail.
class VerificationError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

inline void guard(bool condition, const std::string& what) {
  if (!condition) throw GuardError(what);
}

}  // namespace divgraph
