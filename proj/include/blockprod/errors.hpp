#pragma once

#include <stdexcept>
#include <string>

namespace blockprod {

// Every failure that can falsify a claimed identity has its own type so that
// callers (and the CLI) can report which claim broke.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDivisible : Error {
  using Error::Error;
};
struct MissingVariable : Error {
  using Error::Error;
};
struct InvariantViolation : Error {
  using Error::Error;
};
struct ParityViolation : Error {
  using Error::Error;
};
struct EquationMismatch : Error {
  using Error::Error;
};
struct UnknownEquation : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct ZeroLeadingCoefficient : Error {
  using Error::Error;
};
struct OutOfSieveRange : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};

}  // namespace blockprod
