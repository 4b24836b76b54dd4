#include "levelmod/lp.hpp"

#include "levelmod/errors.hpp"

#include <algorithm>

namespace levelmod::lp {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::size_t num_cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const Rational f = rows[i][c];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < num_cols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  void remove_row(std::size_t r) {
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

// Minimizes cost . x over the current tableau restricted to `allowed` columns.
// Returns false when unbounded.
bool run(Tableau& t, const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
  for (;;) {
    std::size_t entering = kNone;
    for (std::size_t j = 0; j < t.num_cols && entering == kNone; ++j) {
      if (!allowed[j] || std::find(t.basis.begin(), t.basis.end(), j) != t.basis.end()) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.rows[i][j].is_zero()) reduced -= cost[t.basis[i]] * t.rows[i][j];
      }
      if (reduced.sign() < 0) entering = j;
    }
    if (entering == kNone) return true;

    std::size_t leaving = kNone;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const Rational& a = t.rows[i][entering];
      if (a.sign() <= 0) continue;
      const Rational ratio = t.rhs[i] / a;
      if (leaving == kNone || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == kNone) return false;
    t.pivot(leaving, entering);
  }
}

std::vector<Rational> row_values(const Tableau& t, std::size_t n) {
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) x[t.basis[i]] = t.rhs[i];
  }
  return x;
}

void check_shape(const LinearProgram& p) {
  if (p.objective.size() != p.num_vars) {
    throw Error(ErrorCode::InternalInconsistency, "objective length differs from variable count");
  }
  for (const auto& c : p.constraints) {
    if (c.coeffs.size() != p.num_vars) {
      throw Error(ErrorCode::InternalInconsistency, "constraint length differs from variable count");
    }
  }
}

bool holds(const Constraint& c, const Rational& lhs) {
  switch (c.relation) {
    case Relation::LessEqual: return lhs <= c.rhs;
    case Relation::Equal: return lhs == c.rhs;
    case Relation::GreaterEqual: return lhs >= c.rhs;
  }
  return false;
}

}  // namespace

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool is_feasible(const LinearProgram& program, const std::vector<Rational>& x) {
  if (x.size() != program.num_vars) return false;
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (const auto& c : program.constraints) {
    if (!holds(c, dot(c.coeffs, x))) return false;
  }
  return true;
}

Solution solve_simplex(const LinearProgram& program) {
  check_shape(program);
  const std::size_t n = program.num_vars;
  const std::size_t m = program.constraints.size();

  // Column layout: [x (n)] [slack/surplus (one per inequality)] [artificial (as needed)].
  std::vector<Constraint> rows = program.constraints;
  for (auto& c : rows) {
    if (c.rhs.sign() < 0) {
      for (auto& v : c.coeffs) v = -v;
      c.rhs = -c.rhs;
      if (c.relation == Relation::LessEqual) {
        c.relation = Relation::GreaterEqual;
      } else if (c.relation == Relation::GreaterEqual) {
        c.relation = Relation::LessEqual;
      }
    }
  }
  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (const auto& c : rows) {
    if (c.relation != Relation::Equal) ++num_slack;
    if (c.relation != Relation::LessEqual) ++num_artificial;
  }

  Tableau t;
  t.num_cols = n + num_slack + num_artificial;
  t.rows.assign(m, std::vector<Rational>(t.num_cols));
  t.rhs.resize(m);
  t.basis.resize(m);
  std::size_t slack_col = n;
  std::size_t art_col = n + num_slack;
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(rows[i].coeffs.begin(), rows[i].coeffs.end(), t.rows[i].begin());
    t.rhs[i] = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::LessEqual:
        t.rows[i][slack_col] = 1;
        t.basis[i] = slack_col++;
        break;
      case Relation::GreaterEqual:
        t.rows[i][slack_col++] = -1;
        t.rows[i][art_col] = 1;
        t.basis[i] = art_col++;
        break;
      case Relation::Equal:
        t.rows[i][art_col] = 1;
        t.basis[i] = art_col++;
        break;
    }
  }
  const std::size_t first_artificial = n + num_slack;

  if (num_artificial > 0) {
    std::vector<Rational> phase1_cost(t.num_cols);
    for (std::size_t j = first_artificial; j < t.num_cols; ++j) phase1_cost[j] = 1;
    run(t, phase1_cost, std::vector<bool>(t.num_cols, true));
    Rational infeasibility;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basis[i] >= first_artificial) infeasibility += t.rhs[i];
    }
    if (infeasibility.sign() > 0) return Solution{Status::Infeasible, {}, {}};

    // Drive zero-level artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t i = t.rows.size(); i-- > 0;) {
      if (t.basis[i] < first_artificial) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_artificial && col == kNone; ++j) {
        if (!t.rows[i][j].is_zero()) col = j;
      }
      if (col == kNone) {
        t.remove_row(i);
      } else {
        t.pivot(i, col);
      }
    }
  }

  std::vector<Rational> cost(t.num_cols);
  std::copy(program.objective.begin(), program.objective.end(), cost.begin());
  std::vector<bool> allowed(t.num_cols, false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(first_artificial), true);
  if (!run(t, cost, allowed)) return Solution{Status::Unbounded, {}, {}};

  Solution s{Status::Optimal, row_values(t, n), {}};
  s.objective = dot(program.objective, s.x);
  return s;
}

std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Solution solve_by_vertex_enumeration(const LinearProgram& program) {
  check_shape(program);
  const std::size_t n = program.num_vars;
  if (n == 0) {
    if (!is_feasible(program, {})) return Solution{Status::Infeasible, {}, {}};
    return Solution{Status::Optimal, {}, 0};
  }

  // Candidate hyperplanes: every constraint followed by x_j = 0.
  std::vector<std::pair<std::vector<Rational>, Rational>> planes;
  for (const auto& c : program.constraints) planes.emplace_back(c.coeffs, c.rhs);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    planes.emplace_back(std::move(e), Rational(0));
  }
  if (planes.size() < n) return Solution{Status::Infeasible, {}, {}};

  Solution best{Status::Infeasible, {}, {}};
  std::vector<bool> pick(planes.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t k = 0; k < planes.size(); ++k) {
      if (!pick[k]) continue;
      a.push_back(planes[k].first);
      b.push_back(planes[k].second);
    }
    auto x = solve_linear_system(std::move(a), std::move(b));
    if (!x || !is_feasible(program, *x)) continue;
    const Rational value = dot(program.objective, *x);
    if (best.status != Status::Optimal || value < best.objective ||
        (value == best.objective && *x < best.x)) {
      best = Solution{Status::Optimal, std::move(*x), value};
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace levelmod::lp
