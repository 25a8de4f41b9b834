#pragma once

// Exact two-phase simplex over the rationals.
//
//   maximize  <objective, u>   subject to   rows * u = rhs,  u >= 0
//
// Bland's rule is used throughout, so the solver terminates on degenerate
// problems; problem sizes in this library are tiny (tens of columns).

#include <vector>

#include "latconv/rational.hpp"

namespace latconv {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // meaningful when Optimal
  Vec solution;    // primal point when Optimal
};

LpResult solve_standard_lp(const std::vector<Vec>& rows, const Vec& rhs, const Vec& objective);

/// Feasibility of {u >= 0 : rows * u = rhs}; fills `solution` on success.
bool standard_feasible(const std::vector<Vec>& rows, const Vec& rhs, Vec* solution = nullptr);

/// maximize <objective, x> subject to ge_rows * x >= ge_rhs, x free.
LpResult solve_inequality_lp(const std::vector<Vec>& ge_rows, const Vec& ge_rhs, const Vec& objective);

}  // namespace latconv
