#pragma once

#include "levelmod/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace levelmod::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// minimize objective . x  subject to  constraints,  x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Two-phase tableau simplex over exact rationals with Bland's rule.
Solution solve_simplex(const LinearProgram& program);

/// Brute-force optimum over all vertices of the feasible polyhedron (each vertex is the
/// unique solution of num_vars linearly independent active constraints, bounds included).
/// Assumes the objective is bounded below on the feasible set; intended for a handful of
/// variables. Ties keep the lexicographically smallest x.
Solution solve_by_vertex_enumeration(const LinearProgram& program);

/// Solves the square system a x = b exactly; nullopt when a is singular.
std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b);

/// True when x >= 0 and every constraint holds exactly.
bool is_feasible(const LinearProgram& program, const std::vector<Rational>& x);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace levelmod::lp
