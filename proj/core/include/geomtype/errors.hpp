#pragma once

#include <stdexcept>
#include <string>

namespace geomtype {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A syntactically well-formed input whose data fails validation.
struct InvalidType : Error {
  using Error::Error;
};

/// Wrong slot kind passed to a direction-specific operation.
struct KindError : Error {
  using Error::Error;
};

/// Perron machinery requested for a reducible transition matrix.
struct ReducibleError : Error {
  using Error::Error;
};

/// .gt / .gtc / CLI argument syntax problems. Carries line/column when known.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct FormatError : Error {
  using Error::Error;
};

struct IllegalMove : Error {
  using Error::Error;
};

/// Exploration or search exceeded its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

/// Identification of lifted rectangles became ambiguous near a guard.
struct WindingGuardError : Error {
  using Error::Error;
};

struct NotAQuadrantPair : Error {
  using Error::Error;
};

struct NotBReducible : Error {
  using Error::Error;
};

struct NotCApplicable : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

struct NotComparable : Error {
  using Error::Error;
};

struct DetError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

}  // namespace geomtype
