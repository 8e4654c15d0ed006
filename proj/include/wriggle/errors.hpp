#pragma once

#include <stdexcept>
#include <string>

namespace wriggle {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text did not match the tangle grammar. line/column are 1-based.
struct SyntaxError : Error {
  SyntaxError(int line_, int column_, std::string expected_)
      : Error("syntax error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": expected " + expected_),
        line(line_), column(column_), expected(std::move(expected_)) {}
  int line;
  int column;
  std::string expected;
};

struct InvalidDiagramError : Error {
  using Error::Error;
};

struct UnsupportedClosureError : Error {
  using Error::Error;
};

struct BoundaryMismatchError : Error {
  using Error::Error;
};

struct CupCapForbiddenError : Error {
  using Error::Error;
};

struct NotASelfCrossingError : Error {
  using Error::Error;
};

// The constructive and chord-count routes disagreed. Always a bug.
struct OracleMismatchError : Error {
  using Error::Error;
};

struct CoefficientOverflowError : Error {
  using Error::Error;
};

struct MoveNotApplicableError : Error {
  using Error::Error;
};

struct PartialAssignmentError : Error {
  using Error::Error;
};

struct InfeasibleRequestError : Error {
  using Error::Error;
};

}  // namespace wriggle
