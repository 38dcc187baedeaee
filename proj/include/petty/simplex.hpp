#pragma once

#include <optional>
#include <vector>

#include "petty/errors.hpp"
#include "petty/rational.hpp"

namespace petty {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <class S>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  S objective{};
  std::vector<S> x;       // primal solution, size cols (kOptimal only)
  std::vector<S> farkas;  // y with yᵀA <= 0 and yᵀb > 0 (kInfeasible only)
};

namespace lp_detail {

template <class S>
struct Tol {
  static bool is_zero(const S& v) { return v == 0; }
  static bool is_neg(const S& v) { return v < 0; }
  static bool is_pos(const S& v) { return v > 0; }
};

template <>
struct Tol<double> {
  static constexpr double eps = 1e-10;
  static bool is_zero(double v) { return v > -eps && v < eps; }
  static bool is_neg(double v) { return v <= -eps; }
  static bool is_pos(double v) { return v >= eps; }
};

}  // namespace lp_detail

/// Two-phase primal simplex with Bland's rule on the dense tableau
///   min cᵀx  s.t.  A x = b,  x >= 0.
/// Exact when S is a rational type; tolerance-guarded when S is double.
/// On infeasibility the Farkas certificate is extracted from the phase-1
/// duals and re-verified by substitution before returning.
template <class S>
LpSolution<S> solve_standard_lp(int rows, int cols, std::vector<S> a,
                                std::vector<S> b, std::vector<S> c) {
  using T = lp_detail::Tol<S>;
  if (static_cast<int>(a.size()) != rows * cols || static_cast<int>(b.size()) != rows ||
      static_cast<int>(c.size()) != cols) {
    throw InternalError("solve_standard_lp: shape mismatch");
  }
  std::vector<signed char> row_sign(rows, 1);
  for (int i = 0; i < rows; ++i) {
    if (b[i] < 0) {
      row_sign[i] = -1;
      b[i] = -b[i];
      for (int j = 0; j < cols; ++j) a[i * cols + j] = -a[i * cols + j];
    }
  }

  const int width = cols + rows + 1;  // structural, artificial, rhs
  std::vector<S> t(static_cast<size_t>(rows + 1) * width, S(0));
  auto at = [&](int r, int j) -> S& { return t[static_cast<size_t>(r) * width + j]; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) at(i, j) = a[i * cols + j];
    at(i, cols + i) = 1;
    at(i, width - 1) = b[i];
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  // Objective row holds reduced costs; rhs holds -objective.
  auto set_objective = [&](const std::vector<S>& cost, int ncost) {
    for (int j = 0; j < width; ++j) at(rows, j) = 0;
    for (int j = 0; j < ncost; ++j) at(rows, j) = cost[j];
    for (int i = 0; i < rows; ++i) {
      const S cb = basis[i] < ncost ? cost[basis[i]] : S(0);
      if (T::is_zero(cb)) continue;
      for (int j = 0; j < width; ++j) at(rows, j) -= cb * at(i, j);
    }
  };

  auto pivot = [&](int pr, int pc) {
    const S pv = at(pr, pc);
    for (int j = 0; j < width; ++j) at(pr, j) /= pv;
    at(pr, pc) = 1;  // keep exact for double
    for (int r = 0; r <= rows; ++r) {
      if (r == pr) continue;
      const S f = at(r, pc);
      if (T::is_zero(f)) continue;
      for (int j = 0; j < width; ++j) at(r, j) -= f * at(pr, j);
      at(r, pc) = 0;
    }
    basis[pr] = pc;
  };

  // Bland: entering = smallest index with negative reduced cost;
  // leaving = min ratio, ties by smallest basis index.
  auto run = [&](int ncols_active) -> LpStatus {
    const int iter_cap = 2000 + 200 * (rows + cols);
    for (int it = 0; it < iter_cap; ++it) {
      int pc = -1;
      for (int j = 0; j < ncols_active; ++j) {
        if (T::is_neg(at(rows, j))) {
          pc = j;
          break;
        }
      }
      if (pc < 0) return LpStatus::kOptimal;
      int pr = -1;
      for (int i = 0; i < rows; ++i) {
        if (!T::is_pos(at(i, pc))) continue;
        if (pr < 0) {
          pr = i;
          continue;
        }
        const S lhs = at(i, width - 1) * at(pr, pc);
        const S rhs = at(pr, width - 1) * at(i, pc);
        if (lhs < rhs || (lhs == rhs && basis[i] < basis[pr])) pr = i;
      }
      if (pr < 0) return LpStatus::kUnbounded;
      pivot(pr, pc);
    }
    throw SolverError("simplex iteration cap exceeded");
  };

  // Phase 1: minimize sum of artificials.
  {
    std::vector<S> phase1_cost(cols + rows, S(0));
    for (int i = 0; i < rows; ++i) phase1_cost[cols + i] = 1;
    set_objective(phase1_cost, cols + rows);
  }
  LpStatus s1 = run(cols + rows);
  if (s1 == LpStatus::kUnbounded) throw InternalError("phase-1 unbounded");
  const S phase1_obj = -at(rows, width - 1);
  if (T::is_pos(phase1_obj)) {
    LpSolution<S> sol;
    sol.status = LpStatus::kInfeasible;
    // Duals of phase 1: reduced cost of artificial i is 1 - y_i.
    sol.farkas.resize(rows);
    for (int i = 0; i < rows; ++i) {
      S y = S(1) - at(rows, cols + i);
      sol.farkas[i] = row_sign[i] < 0 ? S(-y) : y;
    }
    // Verify yᵀA <= 0 (in the orientation of the caller's rows) and yᵀb > 0.
    if constexpr (!std::is_same_v<S, double>) {
      S yb = 0;
      for (int i = 0; i < rows; ++i) {
        yb += sol.farkas[i] * (row_sign[i] < 0 ? S(-b[i]) : b[i]);
      }
      if (!(yb > 0)) throw InternalError("farkas certificate failed yb > 0");
      for (int j = 0; j < cols; ++j) {
        S ya = 0;
        for (int i = 0; i < rows; ++i) {
          S aij = a[i * cols + j];
          if (row_sign[i] < 0) aij = -aij;
          ya += sol.farkas[i] * aij;
        }
        if (ya > 0) throw InternalError("farkas certificate failed yA <= 0");
      }
    }
    return sol;
  }

  // Drive leftover artificials out of the basis where possible.
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) continue;
    int pc = -1;
    for (int j = 0; j < cols; ++j) {
      if (!T::is_zero(at(i, j))) {
        pc = j;
        break;
      }
    }
    if (pc >= 0) pivot(i, pc);
    // Otherwise the row is redundant; the artificial stays basic at zero.
  }

  // Phase 2.
  set_objective(c, cols);
  LpStatus s2 = run(cols);
  LpSolution<S> sol;
  sol.status = s2;
  if (s2 == LpStatus::kOptimal) {
    sol.x.assign(cols, S(0));
    for (int i = 0; i < rows; ++i) {
      if (basis[i] < cols) sol.x[basis[i]] = at(i, width - 1);
    }
    sol.objective = 0;
    for (int j = 0; j < cols; ++j) sol.objective += c[j] * sol.x[j];
  }
  return sol;
}

/// Row of a general LP: sum_j coeff[j] x_j (relation) rhs.
enum class LpRel { kEq, kLe, kGe };

template <class S>
struct LpRow {
  std::vector<S> coeff;
  LpRel rel = LpRel::kEq;
  S rhs{};
};

/// Variable bounds; unset optional means unbounded on that side.
template <class S>
struct LpBounds {
  std::optional<S> lower;
  std::optional<S> upper;
};

/// General-form solver: min cᵀx subject to rows and per-variable bounds.
/// Internally shifts/splits variables into standard form. Farkas
/// certificates are not mapped back through the transformation; callers
/// needing them should build standard-form problems directly.
template <class S>
LpSolution<S> solve_general_lp(int nvars, const std::vector<LpRow<S>>& in_rows,
                               const std::vector<LpBounds<S>>& bounds,
                               std::vector<S> objective) {
  if (static_cast<int>(bounds.size()) != nvars ||
      static_cast<int>(objective.size()) != nvars) {
    throw InternalError("solve_general_lp: shape mismatch");
  }
  // Column plan: x_j = shift_j + sign_j * y_k (one column) or y_k - y_{k+1} (free).
  struct Col {
    int var;
    S shift;
    int sign;  // +1 or -1
  };
  std::vector<Col> cols_plan;
  std::vector<int> var_first_col(nvars, -1);
  std::vector<bool> var_free(nvars, false);
  std::vector<std::optional<S>> extra_upper(nvars);  // residual y <= u row needed
  for (int v = 0; v < nvars; ++v) {
    const auto& bd = bounds[v];
    var_first_col[v] = static_cast<int>(cols_plan.size());
    if (bd.lower && bd.upper && *bd.lower > *bd.upper) {
      LpSolution<S> sol;
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    if (bd.lower) {
      cols_plan.push_back({v, *bd.lower, +1});
      if (bd.upper) extra_upper[v] = *bd.upper - *bd.lower;
    } else if (bd.upper) {
      cols_plan.push_back({v, *bd.upper, -1});
    } else {
      var_free[v] = true;
      cols_plan.push_back({v, S(0), +1});
      cols_plan.push_back({v, S(0), -1});
    }
  }
  const int ncols_struct = static_cast<int>(cols_plan.size());

  int nslack = 0;
  for (const auto& row : in_rows) {
    if (static_cast<int>(row.coeff.size()) != nvars)
      throw InternalError("solve_general_lp: row width mismatch");
    if (row.rel != LpRel::kEq) ++nslack;
  }
  for (int v = 0; v < nvars; ++v) {
    if (extra_upper[v]) ++nslack;
  }
  // Build with slack columns appended per row in order.
  std::vector<std::vector<S>> pend_rows;
  std::vector<S> pend_rhs;
  int slack_seen = 0;
  auto add_general = [&](const std::vector<S>& coeff_struct, S rhs, LpRel rel) {
    std::vector<S> full(ncols_struct + nslack, S(0));
    for (int j = 0; j < ncols_struct; ++j) full[j] = coeff_struct[j];
    if (rel == LpRel::kLe) {
      full[ncols_struct + slack_seen] = 1;
      ++slack_seen;
    } else if (rel == LpRel::kGe) {
      full[ncols_struct + slack_seen] = -1;
      ++slack_seen;
    }
    pend_rows.push_back(std::move(full));
    pend_rhs.push_back(rhs);
  };

  for (const auto& row : in_rows) {
    std::vector<S> r(ncols_struct, S(0));
    S rr = row.rhs;
    for (int v = 0; v < nvars; ++v) {
      const S& cv = row.coeff[v];
      if (cv == 0) continue;
      int c0 = var_first_col[v];
      rr -= cv * cols_plan[c0].shift;
      r[c0] += cv * S(cols_plan[c0].sign);
      if (var_free[v]) r[c0 + 1] += cv * S(cols_plan[c0 + 1].sign);
    }
    add_general(r, rr, row.rel);
  }
  for (int v = 0; v < nvars; ++v) {
    if (!extra_upper[v]) continue;
    std::vector<S> r(ncols_struct, S(0));
    r[var_first_col[v]] = 1;
    add_general(r, *extra_upper[v], LpRel::kLe);
  }

  const int rows_n = static_cast<int>(pend_rows.size());
  const int cols_n = ncols_struct + nslack;
  std::vector<S> a(static_cast<size_t>(rows_n) * cols_n, S(0));
  for (int i = 0; i < rows_n; ++i) {
    for (int j = 0; j < cols_n; ++j) a[static_cast<size_t>(i) * cols_n + j] = pend_rows[i][j];
  }
  std::vector<S> c(cols_n, S(0));
  for (int j = 0; j < ncols_struct; ++j) {
    c[j] = objective[cols_plan[j].var] * S(cols_plan[j].sign);
  }

  LpSolution<S> inner = solve_standard_lp<S>(rows_n, cols_n, std::move(a),
                                             std::move(pend_rhs), std::move(c));
  LpSolution<S> sol;
  sol.status = inner.status;
  if (inner.status == LpStatus::kOptimal) {
    sol.x.assign(nvars, S(0));
    for (int j = 0; j < ncols_struct; ++j) {
      const Col& cp = cols_plan[j];
      sol.x[cp.var] += S(cp.sign) * inner.x[j];
    }
    // The shift applies once per variable.
    for (int v = 0; v < nvars; ++v) sol.x[v] += cols_plan[var_first_col[v]].shift;
    sol.objective = 0;
    for (int v = 0; v < nvars; ++v) sol.objective += objective[v] * sol.x[v];
  }
  return sol;
}

}  // namespace petty
