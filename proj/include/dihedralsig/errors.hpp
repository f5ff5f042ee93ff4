#pragma once

#include <stdexcept>
#include <string>

namespace dihedralsig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad PD code, even p, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The computation cannot decide at working precision, e.g. a degenerate
/// Hermitian form. Callers must not guess a value.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates corrupted upstream data.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dihedralsig
