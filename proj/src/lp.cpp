// Exact rational simplex with primal and dual optima.
//
// Pipeline: general form -> internal standard form (substituted bounds,
// split free variables, slack/surplus columns, b >= 0) -> two-phase primal
// simplex with Bland's least-index rule (termination on degenerate inputs)
// -> map primal/duals back to the original rows and columns.
//
// Every optimal solution is re-verified in the original space before it is
// returned: feasibility, c'x = value, row complementary slackness, dual and
// reduced-cost signs.  Those identities form a complete optimality
// certificate, so a bug in the pivoting cannot silently produce a wrong
// "optimal" answer.

#include "loadprice/lp.hpp"

#include <algorithm>

namespace loadprice {

void LpProblem::all_nonnegative() {
  lower.assign(num_vars(), Rat(0));
  upper.assign(num_vars(), std::optional<Rat>());
}

void LpProblem::validate() const {
  int n = num_vars();
  int r = num_rows();
  if (A.rows != r || (r > 0 && A.cols != n) || static_cast<int>(kinds.size()) != r)
    throw DimensionError("LpProblem: inconsistent matrix dimensions");
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
    throw DimensionError("LpProblem: bounds length mismatch");
}

namespace {

struct VarMap {
  enum Kind { Shifted, Mirrored, Split } kind = Shifted;
  int col1 = -1;
  int col2 = -1;
  Rat off = 0;
};

struct Tableau {
  std::vector<RatVec> rows;  // coefficient rows, length = total columns
  RatVec b;
  std::vector<int> basis;  // basic column per row
  RatVec d;                // current reduced-cost row
  int ncols = 0;

  void pivot(int r, int e) {
    Rat piv = rows[r][e];
    for (Rat& v : rows[r]) v /= piv;
    b[r] /= piv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      Rat f = rows[i][e];
      if (f == 0) continue;
      for (int j = 0; j < ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      b[i] -= f * b[r];
    }
    Rat f = d[e];
    if (f != 0) {
      for (int j = 0; j < ncols; ++j)
        if (rows[r][j] != 0) d[j] -= f * rows[r][j];
    }
    basis[r] = e;
  }

  void set_costs(const RatVec& cost) {
    d = cost;
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat cb = cost[basis[r]];
      if (cb == 0) continue;
      for (int j = 0; j < ncols; ++j)
        if (rows[r][j] != 0) d[j] -= cb * rows[r][j];
    }
  }

  enum class Step { Optimal, Pivoted, Unbounded };

  // Bland: entering = least-index allowed column with d < 0; leaving = min
  // ratio, ties broken by least basic variable index.
  Step bland_step(const std::vector<bool>& allowed) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (allowed[j] && d[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Step::Optimal;
    int leave = -1;
    Rat best = 0;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][enter] <= 0) continue;
      Rat ratio = b[r] / rows[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return Step::Unbounded;
    pivot(leave, enter);
    return Step::Pivoted;
  }
};

struct IntRow {
  RatVec a;  // structural coefficients
  Rat b = 0;
  RowKind kind = RowKind::LessEq;
  int orig = -1;  // original row index, -1 for internal bound rows
  int flip = 1;
};

}  // namespace

LpSolution solve(const LpProblem& p) {
  p.validate();
  const int n = p.num_vars();
  const int m = p.num_rows();
  const bool maximize = p.sense == Sense::Max;

  // Internal standard form: all variables >= 0.
  RatVec c_int;
  std::vector<VarMap> vmap(n);
  Rat const_shift = 0;
  for (int j = 0; j < n; ++j) {
    Rat cj = maximize ? Rat(-p.objective[j]) : p.objective[j];
    if (p.lower[j] && p.upper[j] && *p.upper[j] < *p.lower[j])
      return LpSolution{LpStatus::Infeasible, {}, {}, 0, {}};
    if (p.lower[j]) {
      vmap[j] = {VarMap::Shifted, static_cast<int>(c_int.size()), -1, *p.lower[j]};
      c_int.push_back(cj);
      const_shift += cj * *p.lower[j];
    } else if (p.upper[j]) {
      vmap[j] = {VarMap::Mirrored, static_cast<int>(c_int.size()), -1, *p.upper[j]};
      c_int.push_back(-cj);
      const_shift += cj * *p.upper[j];
    } else {
      vmap[j] = {VarMap::Split, static_cast<int>(c_int.size()), static_cast<int>(c_int.size()) + 1,
                 0};
      c_int.push_back(cj);
      c_int.push_back(-cj);
    }
  }
  const int nstruct = static_cast<int>(c_int.size());

  std::vector<IntRow> irows;
  for (int i = 0; i < m; ++i) {
    IntRow row;
    row.a.assign(nstruct, Rat(0));
    row.b = p.rhs[i];
    row.kind = p.kinds[i];
    row.orig = i;
    for (int j = 0; j < n; ++j) {
      const Rat& a = p.A.at(i, j);
      if (a == 0) continue;
      switch (vmap[j].kind) {
        case VarMap::Shifted:
          row.a[vmap[j].col1] += a;
          row.b -= a * vmap[j].off;
          break;
        case VarMap::Mirrored:
          row.a[vmap[j].col1] -= a;
          row.b -= a * vmap[j].off;
          break;
        case VarMap::Split:
          row.a[vmap[j].col1] += a;
          row.a[vmap[j].col2] -= a;
          break;
      }
    }
    irows.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    if (p.lower[j] && p.upper[j]) {
      IntRow row;
      row.a.assign(nstruct, Rat(0));
      row.a[vmap[j].col1] = 1;
      row.b = *p.upper[j] - *p.lower[j];
      irows.push_back(std::move(row));
    }
  }
  for (IntRow& row : irows) {
    if (row.b < 0) {
      for (Rat& v : row.a) v = -v;
      row.b = -row.b;
      row.flip = -1;
      if (row.kind == RowKind::LessEq)
        row.kind = RowKind::GreaterEq;
      else if (row.kind == RowKind::GreaterEq)
        row.kind = RowKind::LessEq;
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  const int nrows = static_cast<int>(irows.size());
  int ncols = nstruct;
  std::vector<int> sscol(nrows, -1);
  std::vector<int> artcol(nrows, -1);
  for (int r = 0; r < nrows; ++r)
    if (irows[r].kind != RowKind::Eq) sscol[r] = ncols++;
  const int nslack_end = ncols;
  for (int r = 0; r < nrows; ++r)
    if (irows[r].kind != RowKind::LessEq) artcol[r] = ncols++;

  // The column whose final reduced cost reads off this row's dual multiplier
  // (slack for <= rows, artificial otherwise; both have coefficient +1).
  std::vector<int> idcol(nrows, -1);
  for (int r = 0; r < nrows; ++r)
    idcol[r] = irows[r].kind == RowKind::LessEq ? sscol[r] : artcol[r];

  Tableau t;
  t.ncols = ncols;
  t.b.resize(nrows);
  t.basis.assign(nrows, -1);
  t.rows.assign(nrows, RatVec(ncols, Rat(0)));
  for (int r = 0; r < nrows; ++r) {
    for (int j = 0; j < nstruct; ++j) t.rows[r][j] = irows[r].a[j];
    t.b[r] = irows[r].b;
    if (irows[r].kind == RowKind::LessEq) {
      t.rows[r][sscol[r]] = 1;
      t.basis[r] = sscol[r];
    } else if (irows[r].kind == RowKind::GreaterEq) {
      t.rows[r][sscol[r]] = -1;
    }
    if (artcol[r] >= 0) {
      t.rows[r][artcol[r]] = 1;
      t.basis[r] = artcol[r];
    }
  }

  std::vector<bool> allowed(ncols, true);
  for (int j = nslack_end; j < ncols; ++j) allowed[j] = false;  // artificials never enter

  std::vector<bool> row_alive(nrows, true);
  if (nslack_end < ncols) {
    RatVec phase1(ncols, Rat(0));
    for (int j = nslack_end; j < ncols; ++j) phase1[j] = 1;
    t.set_costs(phase1);
    while (t.bland_step(allowed) == Tableau::Step::Pivoted) {
    }
    Rat infeas = 0;
    for (int r = 0; r < nrows; ++r)
      if (t.basis[r] >= nslack_end) infeas += t.b[r];
    if (infeas > 0) return LpSolution{LpStatus::Infeasible, {}, {}, 0, {}};
    // Drive basic artificials (all at value zero now) out of the basis; a row
    // offering no pivot is redundant and drops out of the phase-2 tableau.
    std::vector<bool> col_basic(ncols, false);
    for (int r = 0; r < nrows; ++r) col_basic[t.basis[r]] = true;
    for (int r = 0; r < nrows; ++r) {
      if (t.basis[r] < nslack_end) continue;
      int e = -1;
      for (int j = 0; j < nslack_end; ++j) {
        if (!col_basic[j] && t.rows[r][j] != 0) {
          e = j;
          break;
        }
      }
      if (e >= 0) {
        col_basic[t.basis[r]] = false;
        col_basic[e] = true;
        t.pivot(r, e);
      } else {
        row_alive[r] = false;
      }
    }
  }

  // Phase 2 on the surviving rows.
  std::vector<int> live_from;
  {
    std::vector<RatVec> live_rows;
    RatVec live_b;
    std::vector<int> live_basis;
    for (int r = 0; r < nrows; ++r) {
      if (!row_alive[r]) continue;
      live_rows.push_back(std::move(t.rows[r]));
      live_b.push_back(t.b[r]);
      live_basis.push_back(t.basis[r]);
      live_from.push_back(r);
    }
    t.rows = std::move(live_rows);
    t.b = std::move(live_b);
    t.basis = std::move(live_basis);
  }
  RatVec phase2(ncols, Rat(0));
  for (int j = 0; j < nstruct; ++j) phase2[j] = c_int[j];
  t.set_costs(phase2);
  Tableau::Step st = Tableau::Step::Optimal;
  while ((st = t.bland_step(allowed)) == Tableau::Step::Pivoted) {
  }
  if (st == Tableau::Step::Unbounded) return LpSolution{LpStatus::Unbounded, {}, {}, 0, {}};

  RatVec x_int(nstruct, Rat(0));
  for (size_t r = 0; r < t.basis.size(); ++r)
    if (t.basis[r] < nstruct) x_int[t.basis[r]] = t.b[r];

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.primal.resize(n);
  for (int j = 0; j < n; ++j) {
    switch (vmap[j].kind) {
      case VarMap::Shifted:
        sol.primal[j] = vmap[j].off + x_int[vmap[j].col1];
        break;
      case VarMap::Mirrored:
        sol.primal[j] = vmap[j].off - x_int[vmap[j].col1];
        break;
      case VarMap::Split:
        sol.primal[j] = x_int[vmap[j].col1] - x_int[vmap[j].col2];
        break;
    }
  }
  Rat value_int = const_shift;
  for (int j = 0; j < nstruct; ++j)
    if (x_int[j] != 0) value_int += c_int[j] * x_int[j];
  sol.value = maximize ? Rat(-value_int) : value_int;

  std::vector<int> live_of_row(nrows, -1);
  for (size_t lr = 0; lr < live_from.size(); ++lr) live_of_row[live_from[lr]] = static_cast<int>(lr);
  sol.dual.assign(m, Rat(0));
  for (int r = 0; r < nrows; ++r) {
    int orig = irows[r].orig;
    if (orig < 0 || live_of_row[r] < 0) continue;
    Rat w = -t.d[idcol[r]];
    Rat y = Rat(irows[r].flip) * w;
    sol.dual[orig] = maximize ? Rat(-y) : y;
  }

  sol.basis = t.basis;
  std::sort(sol.basis.begin(), sol.basis.end());
  verify_optimal(p, sol);
  return sol;
}

RatVec reduced_costs(const LpProblem& p, const LpSolution& s) {
  int n = p.num_vars();
  RatVec d(n);
  for (int j = 0; j < n; ++j) {
    Rat z = 0;
    for (int i = 0; i < p.num_rows(); ++i)
      if (p.A.at(i, j) != 0) z += s.dual[i] * p.A.at(i, j);
    d[j] = p.objective[j] - z;
  }
  return d;
}

bool lp_feasible_point(const LpProblem& p, const RatVec& x) {
  if (static_cast<int>(x.size()) != p.num_vars()) return false;
  for (int j = 0; j < p.num_vars(); ++j) {
    if (p.lower[j] && x[j] < *p.lower[j]) return false;
    if (p.upper[j] && x[j] > *p.upper[j]) return false;
  }
  for (int i = 0; i < p.num_rows(); ++i) {
    Rat lhs = 0;
    for (int j = 0; j < p.num_vars(); ++j)
      if (p.A.at(i, j) != 0) lhs += p.A.at(i, j) * x[j];
    switch (p.kinds[i]) {
      case RowKind::LessEq:
        if (lhs > p.rhs[i]) return false;
        break;
      case RowKind::Eq:
        if (lhs != p.rhs[i]) return false;
        break;
      case RowKind::GreaterEq:
        if (lhs < p.rhs[i]) return false;
        break;
    }
  }
  return true;
}

void verify_optimal(const LpProblem& p, const LpSolution& s) {
  if (s.status != LpStatus::Optimal) throw InvariantViolation("verify_optimal: not optimal");
  if (!lp_feasible_point(p, s.primal)) throw InvariantViolation("lp: primal infeasible");
  if (dot(p.objective, s.primal) != s.value) throw InvariantViolation("lp: value mismatch");
  if (static_cast<int>(s.dual.size()) != p.num_rows())
    throw InvariantViolation("lp: dual length mismatch");

  const bool mn = p.sense == Sense::Min;
  for (int i = 0; i < p.num_rows(); ++i) {
    Rat lhs = 0;
    for (int j = 0; j < p.num_vars(); ++j)
      if (p.A.at(i, j) != 0) lhs += p.A.at(i, j) * s.primal[j];
    Rat surplus = lhs - p.rhs[i];
    if (surplus * s.dual[i] != 0) throw InvariantViolation("lp: row complementary slackness");
    if (p.kinds[i] == RowKind::LessEq && (mn ? s.dual[i] > 0 : s.dual[i] < 0))
      throw InvariantViolation("lp: dual sign on <= row");
    if (p.kinds[i] == RowKind::GreaterEq && (mn ? s.dual[i] < 0 : s.dual[i] > 0))
      throw InvariantViolation("lp: dual sign on >= row");
  }

  RatVec d = reduced_costs(p, s);
  Rat acc = 0;
  for (int i = 0; i < p.num_rows(); ++i) acc += s.dual[i] * p.rhs[i];
  for (int j = 0; j < p.num_vars(); ++j) {
    bool at_lower = p.lower[j] && s.primal[j] == *p.lower[j];
    bool at_upper = p.upper[j] && s.primal[j] == *p.upper[j];
    if (!at_lower && !at_upper) {
      if (d[j] != 0) throw InvariantViolation("lp: reduced cost of interior variable");
    } else if (at_lower && !at_upper) {
      if (mn ? d[j] < 0 : d[j] > 0) throw InvariantViolation("lp: reduced cost sign at lower bound");
    } else if (at_upper && !at_lower) {
      if (mn ? d[j] > 0 : d[j] < 0) throw InvariantViolation("lp: reduced cost sign at upper bound");
    }
    acc += d[j] * s.primal[j];
  }
  if (acc != s.value) throw InvariantViolation("lp: strong duality accounting");
}

std::vector<RatVec> optimal_face_points(const LpProblem& p, const Rat& value,
                                        const std::vector<RatVec>& candidates) {
  std::vector<RatVec> out;
  for (const RatVec& x : candidates)
    if (lp_feasible_point(p, x) && dot(p.objective, x) == value) out.push_back(x);
  return out;
}

}  // namespace loadprice
