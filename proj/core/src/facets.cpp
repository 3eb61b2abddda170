#include "turan/facets.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/extremal.hpp"
#include "turan/limits.hpp"

namespace turan {

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  for (const auto& row : rows_)
    if (row.size() != rows_.front().size())
      throw std::invalid_argument("ragged matrix");
}

int RationalMatrix::rank() const {
  if (rows_.empty()) return 0;
  std::size_t m = rows_.size(), n = rows_[0].size();

  // clear denominators per row, then run fraction-free elimination
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < m; ++i) {
    BigInt lcm = 1;
    for (const Rational& x : rows_[i])
      lcm = boost::multiprecision::lcm(lcm, denominator(x));
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = numerator(rows_[i][j]) * (lcm / denominator(rows_[i][j]));
  }

  int rank = 0;
  BigInt prev_pivot = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // magnitude pivoting keeps the Bareiss minors small on 0/1 data
    std::size_t pivot_row = row;
    BigInt best = abs(a[row][col]);
    for (std::size_t i = row + 1; i < m; ++i)
      if (abs(a[i][col]) > best) {
        best = abs(a[i][col]);
        pivot_row = i;
      }
    if (best == 0) continue;
    std::swap(a[row], a[pivot_row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev_pivot;
      a[i][col] = 0;
    }
    prev_pivot = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

int affine_rank_dense(const std::vector<std::vector<Rational>>& points) {
  if (points.empty())
    throw std::invalid_argument("affine rank of an empty point set");
  if (points.size() == 1) return 0;
  std::vector<std::vector<Rational>> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != points[0].size())
      throw std::invalid_argument("points of mixed dimension");
    std::vector<Rational> row(points[0].size());
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  return RationalMatrix(std::move(diffs)).rank();
}

int affine_rank(std::span<const EdgeSet> points) {
  if (points.empty())
    throw std::invalid_argument("affine rank of an empty point set");
  std::size_t dim = points[0].universe_size();
  std::vector<std::vector<Rational>> dense;
  dense.reserve(points.size());
  for (const EdgeSet& p : points) {
    if (p.universe_size() != dim)
      throw std::invalid_argument("points of mixed dimension");
    std::vector<Rational> row(dim);
    for (std::uint64_t rank : p.edge_ranks()) row[rank] = 1;
    dense.push_back(std::move(row));
  }
  return affine_rank_dense(dense);
}

namespace {

// Depth-first enumeration of all subsets of `rest` whose union with the base
// point stays clique-free. A subset that already closes a clique prunes its
// whole branch.
void extend_clique_free(EdgeSet& current, const std::vector<Edge>& rest,
                        std::size_t index, int a,
                        std::vector<EdgeSet>& out, std::uint64_t cap,
                        bool& truncated) {
  if (out.size() >= cap) {
    truncated = true;
    return;
  }
  if (index == rest.size()) {
    out.push_back(current);
    return;
  }
  extend_clique_free(current, rest, index + 1, a, out, cap, truncated);
  const Edge& e = rest[index];
  current.insert(e);
  if (is_clique_free(current, a))
    extend_clique_free(current, rest, index + 1, a, out, cap, truncated);
  current.set(rank_edge(e), false);
}

}  // namespace

TightPoints tight_points(const LinearInequality& ineq, int a,
                         const EdgeSet& ambient) {
  if (ambient.ambient().r != ineq.r)
    throw std::invalid_argument("ambient uniformity does not match inequality");
  EdgeSet support = ineq.support(ambient.ambient().n);
  if (!ambient.contains_all(support))
    throw std::invalid_argument("ambient must contain the support");

  std::vector<std::int64_t> weights;
  for (const auto& [rank, c] : ineq.coeffs) weights.push_back(c);
  OracleResult oracle = ex_oracle(support, a, weights);

  TightPoints result;
  result.max_lhs = oracle.value;
  result.truncated = oracle.truncated;
  if (oracle.value != ineq.rhs) return result;  // rhs level set is empty

  EdgeSet rest_set = ambient;
  rest_set.subtract(support);
  std::vector<Edge> rest = rest_set.edges();

  if (rest.empty()) {
    result.points = std::move(oracle.optima);
    return result;
  }
  if (ambient.size() > limits::max_extension_ambient())
    throw CapExceeded(
        "tight-point extension beyond the support is capped at ambients of " +
        std::to_string(limits::max_extension_ambient()) +
        " edges; use the lifting-condition checks instead");

  std::uint64_t cap = limits::max_optima();
  bool truncated = result.truncated;
  for (const EdgeSet& opt : oracle.optima) {
    EdgeSet current = opt;
    extend_clique_free(current, rest, 0, a, result.points, cap, truncated);
    if (truncated) break;
  }
  result.truncated = truncated;
  std::sort(result.points.begin(), result.points.end());
  return result;
}

FacetVerdict is_facet(const LinearInequality& ineq, int a,
                      const EdgeSet& ambient) {
  TightPoints tight = tight_points(ineq, a, ambient);
  FacetVerdict verdict;
  verdict.max_lhs = tight.max_lhs;
  verdict.rhs = ineq.rhs;
  verdict.valid = tight.max_lhs <= ineq.rhs;
  verdict.tight_count = tight.points.size();
  verdict.ambient_dim = ambient.size();
  verdict.truncated = tight.truncated;
  if (!tight.points.empty()) {
    // rank over the ambient's own coordinates; bits outside stay zero anyway
    verdict.affine_rank = affine_rank(tight.points);
  }
  verdict.is_facet =
      verdict.valid && verdict.max_lhs == verdict.rhs && !verdict.truncated &&
      verdict.affine_rank >= 0 &&
      static_cast<std::uint64_t>(verdict.affine_rank) ==
          verdict.ambient_dim - 1;
  return verdict;
}

bool check_lift_rank_form(const EdgeSet& h_support, const EdgeSet& g_ambient,
                          int a) {
  if (!g_ambient.contains_all(h_support))
    throw std::invalid_argument("ambient must contain the subgraph");
  EdgeSet rest = g_ambient;
  rest.subtract(h_support);
  std::vector<std::uint64_t> missing = rest.edge_ranks();
  if (missing.empty()) return true;

  OracleOptions opts;
  opts.enumerate_optima = false;
  std::int64_t base = ex_oracle(h_support, a, {}, opts).value;
  for (std::uint64_t rank : missing) {
    EdgeSet extended = h_support;
    extended.set(rank, true);
    if (ex_oracle(extended, a, {}, opts).value != base + 1) return false;
  }
  return true;
}

bool check_lift_general_form(const LinearInequality& ineq,
                             const EdgeSet& g_ambient, int a) {
  EdgeSet support = ineq.support(g_ambient.ambient().n);
  if (!g_ambient.contains_all(support))
    throw std::invalid_argument("ambient must contain the support");
  EdgeSet rest = g_ambient;
  rest.subtract(support);
  std::vector<std::uint64_t> missing = rest.edge_ranks();
  if (missing.empty()) return true;

  std::vector<std::int64_t> weights;
  for (const auto& [rank, c] : ineq.coeffs) weights.push_back(c);
  OracleResult oracle = ex_oracle(support, a, weights);
  if (oracle.truncated)
    throw CapExceeded(
        "tight-point list truncated; the lifting check would be unsound");
  if (oracle.value != ineq.rhs) return false;  // no tight points at rhs

  for (std::uint64_t rank : missing) {
    bool found = false;
    for (const EdgeSet& opt : oracle.optima) {
      EdgeSet candidate = opt;
      candidate.set(rank, true);
      if (is_clique_free(candidate, a)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace turan
