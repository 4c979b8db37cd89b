#pragma once

#include <optional>
#include <vector>

#include "loadprice/rational.hpp"

namespace loadprice {

enum class Sense { Min, Max };
enum class RowKind { LessEq, Eq, GreaterEq };
enum class LpStatus { Optimal, Infeasible, Unbounded };

// General-form LP over exact rationals:
//
//   min/max  c'x   s.t.   A x {<=,=,>=} b,   lower <= x <= upper
//
// Bounds are optional per variable; a variable with neither bound is free.
struct LpProblem {
  Sense sense = Sense::Min;
  RatVec objective;
  RatMat A;
  RatVec rhs;
  std::vector<RowKind> kinds;
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }

  // Marks every variable as >= 0 (the common case here).
  void all_nonnegative();
  void validate() const;
};

// Primal and dual optimum of a solved LP.  Dual signs follow the shadow-price
// convention: for a min problem, >= rows carry y >= 0 and <= rows y <= 0; for
// a max problem the signs flip.  At optimality
//
//   c'x* = y'b + d'x*   with d = c - A'y the reduced costs,
//
// and complementary slackness holds row- and column-wise, all exactly.
// solve() verifies these identities before returning.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RatVec primal;
  RatVec dual;
  Rat value = 0;
  std::vector<int> basis;  // basic columns of the internal standard form
};

LpSolution solve(const LpProblem& p);

// Reduced costs c_j - y'A_j of the original columns under a solution's duals.
RatVec reduced_costs(const LpProblem& p, const LpSolution& s);

// Exact feasibility of a point for the problem (rows, kinds and bounds).
bool lp_feasible_point(const LpProblem& p, const RatVec& x);

// Throws InvariantViolation unless (primal, dual) is an exact optimality
// certificate: feasible, value consistent, complementary slack, signed duals
// and reduced costs.  Exposed so tests can re-verify solutions independently.
void verify_optimal(const LpProblem& p, const LpSolution& s);

// The candidates that are feasible for p and attain `value` exactly, in input
// order.  `value` must be the proven optimal value; the function itself only
// does exact filtering.
std::vector<RatVec> optimal_face_points(const LpProblem& p, const Rat& value,
                                        const std::vector<RatVec>& candidates);

}  // namespace loadprice
