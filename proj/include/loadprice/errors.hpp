#pragma once

#include <stdexcept>
#include <string>

namespace loadprice {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shapes and sizes that do not line up (matrix vs vector, point vs ambient dim).
struct DimensionError : Error {
  using Error::Error;
};

// Malformed or inconsistent input data (missing table entry, bad sign, ...).
struct StructuralError : Error {
  using Error::Error;
};

// An exhaustive scan would exceed its configured cap.
struct CapacityError : Error {
  using Error::Error;
};

// A tabulated function was queried outside its covered grid.
struct CoverageError : Error {
  using Error::Error;
};

// A demand oracle returned a point outside the declared strategy space.
struct OracleViolation : Error {
  using Error::Error;
};

// Input combination the library deliberately does not handle.
struct UnsupportedError : Error {
  using Error::Error;
};

// A step that theory guarantees to succeed failed; indicates a bug or a
// violated precondition upstream.  Surfaced loudly, never swallowed.
struct TheoremContradiction : Error {
  using Error::Error;
};

// An internal exactness check (strong duality, complementary slackness,
// integrality of a provably integral vertex) failed.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace loadprice
