#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "turan/combinat.hpp"
#include "turan/rational.hpp"

namespace turan {

struct ConstraintRow {
  std::map<std::uint64_t, std::int64_t> coeffs;  // variable (edge rank) -> c
  std::int64_t rhs = 0;                          // relation is <=
  std::string label;
};

// Clique relaxation of the edge polytope: one row per i-clique for
// a <= i <= n-1, plus 0 <= x_e <= 1 on every edge variable.
struct ConstraintSystem {
  int n = 0;
  int r = 0;
  int a = 0;
  std::vector<ConstraintRow> rows;
  bool unit_bounds = true;

  std::uint64_t variable_count() const { return binomial(n, r); }
};

// The full clique row (i = n) is outside the relaxation by definition;
// include_full_clique adds it for experimentation.
ConstraintSystem build_Q(int n, int a, int r, bool include_full_clique = false);

struct LpResult {
  Rational value;
  std::vector<Rational> point;  // one coordinate per edge rank
  std::uint64_t pivots = 0;
};

// Exact rational maximization over the system. Dense tableau simplex with
// Bland's anti-cycling rule; the unit bounds make the problem feasible and
// bounded, and infeasibility/unboundedness are still reported if they occur.
LpResult lp_max(const ConstraintSystem& system,
                std::span<const Rational> objective);

// floor(max 1x over Q(n,a,2)) == ex_exact(n,a): the relaxation rounds to the
// exact extremal number in the all-ones direction.
bool integrality_gap_check(int n, int a);

// CPLEX-style LP text format, for interoperability with external solvers.
void write_lp_format(const ConstraintSystem& system,
                     std::span<const Rational> objective, std::ostream& out);

}  // namespace turan
