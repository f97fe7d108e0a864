#pragma once

#include <stdexcept>
#include <string>

namespace yperiod {

// Base of every error raised by the library. Mathematical violations found by
// the checkers are never thrown; they are recorded in a Report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct ShapeUnsupported : Error {
  using Error::Error;
};
struct MissingNeighbor : Error {
  using Error::Error;
};
struct DegenerateValue : Error {
  using Error::Error;
};
struct DegenerateSolve : Error {
  using Error::Error;
};
struct DegenerateFactor : Error {
  using Error::Error;
};
struct InconsistentKnowns : Error {
  using Error::Error;
};
struct NotRegular : Error {
  using Error::Error;
};
struct NotApplicable : Error {
  using Error::Error;
};
struct InsufficientWindow : Error {
  using Error::Error;
};
struct SeedExhausted : Error {
  using Error::Error;
};
struct IoFailure : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace yperiod
