#include "turan/lp.hpp"

#include <ostream>
#include <stdexcept>

#include "turan/extremal.hpp"
#include "turan/limits.hpp"

namespace turan {

ConstraintSystem build_Q(int n, int a, int r, bool include_full_clique) {
  if (a <= r) throw std::invalid_argument("relaxation needs a > r");
  if (a > n) throw std::invalid_argument("need a <= n");
  CompleteHypergraph ambient(n, r);

  std::uint64_t row_estimate = 0;
  int top = include_full_clique ? n : n - 1;
  for (int i = a; i <= top; ++i) row_estimate += binomial(n, i);
  if (row_estimate > limits::max_lp_rows())
    throw CapExceeded("clique relaxation would have " +
                      std::to_string(row_estimate) +
                      " rows, above the cap of " +
                      std::to_string(limits::max_lp_rows()));

  ConstraintSystem system;
  system.n = n;
  system.r = r;
  system.a = a;
  for (int i = a; i <= top; ++i) {
    std::int64_t rhs;
    if (r == 2) {
      rhs = ex_exact(i, a);
    } else {
      OracleOptions opts;
      opts.enumerate_optima = false;
      rhs = ex_oracle(EdgeSet::complete(i, r), a, {}, opts).value;
    }
    for (const auto& clique : enumerate_cliques(n, r, i)) {
      ConstraintRow row;
      for (std::uint64_t rank : clique_edge_set(clique, r, n).edge_ranks())
        row.coeffs[rank] = 1;
      row.rhs = rhs;
      row.label = "clique" + std::to_string(i);
      system.rows.push_back(std::move(row));
    }
  }
  return system;
}

LpResult lp_max(const ConstraintSystem& system,
                std::span<const Rational> objective) {
  std::uint64_t n_vars = system.variable_count();
  if (objective.size() != n_vars)
    throw std::invalid_argument("objective size does not match variables");

  // rows: clique rows plus upper bounds; all right-hand sides nonnegative,
  // so the all-slack basis is feasible and no phase one is needed
  std::size_t n_rows = system.rows.size() + (system.unit_bounds ? n_vars : 0);
  std::size_t width = n_vars + n_rows + 1;  // structural, slack, rhs

  std::vector<std::vector<Rational>> tab(n_rows + 1,
                                         std::vector<Rational>(width));
  std::size_t rhs_col = n_vars + n_rows;
  for (std::size_t i = 0; i < system.rows.size(); ++i) {
    for (const auto& [rank, c] : system.rows[i].coeffs) tab[i][rank] = c;
    if (system.rows[i].rhs < 0)
      throw std::invalid_argument("negative right-hand side unsupported");
    tab[i][n_vars + i] = 1;
    tab[i][rhs_col] = system.rows[i].rhs;
  }
  if (system.unit_bounds) {
    for (std::uint64_t v = 0; v < n_vars; ++v) {
      std::size_t i = system.rows.size() + v;
      tab[i][v] = 1;
      tab[i][n_vars + i] = 1;
      tab[i][rhs_col] = 1;
    }
  }
  // objective row keeps the reduced costs of a maximization
  for (std::uint64_t v = 0; v < n_vars; ++v) tab[n_rows][v] = objective[v];

  std::vector<std::size_t> basis(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) basis[i] = n_vars + i;

  LpResult result;
  while (true) {
    // Bland: entering variable is the lowest index with positive reduced cost
    std::size_t entering = width - 1;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (tab[n_rows][j] > 0) {
        entering = j;
        break;
      }
    if (entering == width - 1) break;  // optimal

    // ratio test; ties resolved by the lowest basis variable index (Bland)
    std::size_t leaving = n_rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (tab[i][entering] <= 0) continue;
      Rational ratio = tab[i][rhs_col] / tab[i][entering];
      if (leaving == n_rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving == n_rows)
      throw std::runtime_error("linear program is unbounded");

    // pivot
    Rational pivot = tab[leaving][entering];
    for (std::size_t j = 0; j < width; ++j) tab[leaving][j] /= pivot;
    for (std::size_t i = 0; i <= n_rows; ++i) {
      if (i == leaving) continue;
      Rational factor = tab[i][entering];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < width; ++j)
        tab[i][j] -= factor * tab[leaving][j];
    }
    basis[leaving] = entering;
    ++result.pivots;
  }

  result.point.assign(n_vars, Rational(0));
  for (std::size_t i = 0; i < n_rows; ++i)
    if (basis[i] < n_vars) result.point[basis[i]] = tab[i][rhs_col];
  result.value = Rational(0);
  for (std::uint64_t v = 0; v < n_vars; ++v)
    result.value += objective[v] * result.point[v];
  return result;
}

bool integrality_gap_check(int n, int a) {
  ConstraintSystem system = build_Q(n, a, 2);
  std::vector<Rational> ones(system.variable_count(), Rational(1));
  LpResult lp = lp_max(system, ones);
  return floor_rational(lp.value) == BigInt(ex_exact(n, a));
}

namespace {

std::string variable_name(std::uint64_t rank, int n, int r) {
  Edge e = unrank_edge(rank, n, r);
  std::string name = "x";
  for (Vertex v : e.vertices) name += "_" + std::to_string(v);
  return name;
}

void write_terms(std::ostream& out,
                 const std::map<std::uint64_t, std::int64_t>& coeffs, int n,
                 int r) {
  bool first = true;
  for (const auto& [rank, c] : coeffs) {
    if (!first) out << " + ";
    if (c != 1) out << c << " ";
    out << variable_name(rank, n, r);
    first = false;
  }
}

}  // namespace

void write_lp_format(const ConstraintSystem& system,
                     std::span<const Rational> objective, std::ostream& out) {
  std::uint64_t n_vars = system.variable_count();
  if (objective.size() != n_vars)
    throw std::invalid_argument("objective size does not match variables");
  out << "Maximize\n obj:";
  bool first = true;
  for (std::uint64_t v = 0; v < n_vars; ++v) {
    if (objective[v] == 0) continue;
    out << (first ? " " : " + ");
    if (objective[v] != 1) out << rational_to_string(objective[v]) << " ";
    out << variable_name(v, system.n, system.r);
    first = false;
  }
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < system.rows.size(); ++i) {
    out << " c" << (i + 1) << ": ";
    write_terms(out, system.rows[i].coeffs, system.n, system.r);
    out << " <= " << system.rows[i].rhs << "\n";
  }
  out << "Bounds\n";
  for (std::uint64_t v = 0; v < n_vars; ++v)
    out << " 0 <= " << variable_name(v, system.n, system.r) << " <= 1\n";
  out << "End\n";
}

}  // namespace turan
