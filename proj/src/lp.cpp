#include "latconv/lp.hpp"

#include <stdexcept>

namespace latconv {
namespace {

class Tableau {
 public:
  // rows: m x n, all rhs >= 0 after sign flips; artificial columns appended.
  Tableau(const std::vector<Vec>& rows, const Vec& rhs, std::size_t n) : n_(n) {
    const std::size_t m = rows.size();
    cols_ = n + m;
    t_.assign(m, Vec(cols_ + 1, Rational(0)));
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = rhs[i].sign() < 0;
      for (std::size_t j = 0; j < n; ++j) t_[i][j] = flip ? Rational(-rows[i][j]) : rows[i][j];
      t_[i][n + i] = 1;
      t_[i][cols_] = flip ? Rational(-rhs[i]) : rhs[i];
      basis_[i] = n + i;
    }
    // Phase one: maximize -(sum of artificials).
    obj_.assign(cols_ + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) obj_[j] += t_[i][j];
      obj_[cols_] += t_[i][cols_];
    }
  }

  // Returns false when unbounded.
  bool optimize(std::size_t usable_cols) {
    while (true) {
      std::size_t enter = usable_cols;
      for (std::size_t j = 0; j < usable_cols; ++j) {
        if (obj_[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == usable_cols) return true;
      std::size_t leave = t_.size();
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == t_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t_[r][c];
    for (auto& x : t_[r]) {
      if (!x.is_zero()) x /= p;
    }
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
      }
    }
    if (!obj_[c].is_zero()) {
      Rational f = obj_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!t_[r][j].is_zero()) obj_[j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  bool phase_one_feasible() const { return obj_[cols_].is_zero(); }

  // Pivots artificials out of the basis; drops redundant rows.
  void purge_artificials() {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!t_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == n_) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  void set_objective(const Vec& c) {
    obj_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = c[j];
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!t_[i][j].is_zero()) obj_[j] -= cb * t_[i][j];
      }
    }
  }

  Rational objective_value() const { return -obj_[cols_]; }

  Vec solution() const {
    Vec u = zeros(n_);
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (basis_[i] < n_) u[basis_[i]] = t_[i][cols_];
    }
    return u;
  }

 private:
  std::size_t n_;
  std::size_t cols_;
  std::vector<Vec> t_;
  Vec obj_;
  std::vector<std::size_t> basis_;
};

void validate(const std::vector<Vec>& rows, const Vec& rhs, std::size_t n) {
  if (rows.size() != rhs.size()) throw DimensionError("lp: row count and rhs size differ");
  for (const auto& r : rows) require_dim(r, n, "lp row");
}

}  // namespace

LpResult solve_standard_lp(const std::vector<Vec>& rows, const Vec& rhs, const Vec& objective) {
  const std::size_t n = objective.size();
  validate(rows, rhs, n);
  Tableau tab(rows, rhs, n);
  tab.optimize(n);
  LpResult res;
  if (!tab.phase_one_feasible()) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  tab.purge_artificials();
  tab.set_objective(objective);
  if (!tab.optimize(n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = tab.objective_value();
  res.solution = tab.solution();
  return res;
}

bool standard_feasible(const std::vector<Vec>& rows, const Vec& rhs, Vec* solution) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  if (rows.empty()) {
    if (solution) solution->clear();
    return true;
  }
  validate(rows, rhs, n);
  Tableau tab(rows, rhs, n);
  tab.optimize(n);
  if (!tab.phase_one_feasible()) return false;
  if (solution) {
    tab.purge_artificials();
    *solution = tab.solution();
  }
  return true;
}

LpResult solve_inequality_lp(const std::vector<Vec>& ge_rows, const Vec& ge_rhs, const Vec& objective) {
  const std::size_t n = objective.size();
  const std::size_t m = ge_rows.size();
  validate(ge_rows, ge_rhs, n);
  // x = xp - xm, rows * x - slack = rhs
  std::vector<Vec> rows(m, zeros(2 * n + m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = ge_rows[i][j];
      rows[i][n + j] = -ge_rows[i][j];
    }
    rows[i][2 * n + i] = -1;
  }
  Vec c = zeros(2 * n + m);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = objective[j];
    c[n + j] = -objective[j];
  }
  LpResult std_res = solve_standard_lp(rows, ge_rhs, c);
  LpResult res;
  res.status = std_res.status;
  if (res.status == LpStatus::Optimal) {
    res.value = std_res.value;
    res.solution = zeros(n);
    for (std::size_t j = 0; j < n; ++j) res.solution[j] = std_res.solution[j] - std_res.solution[n + j];
  }
  return res;
}

}  // namespace latconv
