#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turan/combinat.hpp"
#include "turan/inequalities.hpp"
#include "turan/rational.hpp"

namespace turan {

// Outcome of a facet check by tight-point enumeration and exact rank.
// is_facet holds exactly when the inequality is valid, tight, untruncated,
// and its tight points affinely span a hyperplane of the (full-dimensional)
// ambient polytope.
struct FacetVerdict {
  bool valid = false;
  std::int64_t max_lhs = 0;
  std::int64_t rhs = 0;
  std::uint64_t tight_count = 0;
  int affine_rank = -1;  // -1 when there are no tight points
  std::uint64_t ambient_dim = 0;
  bool is_facet = false;
  bool truncated = false;
};

// Exact-rank workhorse: rows of rationals, rank by fraction-free elimination
// (Bareiss) with magnitude pivoting after clearing denominators per row.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::vector<std::vector<Rational>> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return rows_.empty() ? 0 : rows_[0].size(); }
  int rank() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

struct TightPoints {
  std::vector<EdgeSet> points;  // normalized order
  std::int64_t max_lhs = 0;
  bool truncated = false;
};

// All clique-free subsets of the ambient whose inequality value equals the
// right-hand side. Within the support these are the complements of the
// minimum-weight hitting sets; when the ambient is strictly larger, each is
// extended by every clique-freeness-preserving subset of ambient minus
// support. The list is empty whenever max_lhs != rhs.
TightPoints tight_points(const LinearInequality& ineq, int a,
                         const EdgeSet& ambient);

// Dimension of the affine hull of the given 0/1 points (rank of p_i - p_0).
int affine_rank(std::span<const EdgeSet> points);
int affine_rank_dense(const std::vector<std::vector<Rational>>& points);

FacetVerdict is_facet(const LinearInequality& ineq, int a,
                      const EdgeSet& ambient);

// Sequential-lifting condition in rank form: for every edge e of the ambient
// missing from H, ex(H + e) = ex(H) + 1 (unit weights).
bool check_lift_rank_form(const EdgeSet& h_support, const EdgeSet& g_ambient,
                          int a);

// Sequential-lifting condition in general form: for every missing edge e,
// some tight point of the inequality stays clique-free after adding e.
bool check_lift_general_form(const LinearInequality& ineq,
                             const EdgeSet& g_ambient, int a);

}  // namespace turan
