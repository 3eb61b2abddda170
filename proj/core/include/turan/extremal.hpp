#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turan/combinat.hpp"
#include "turan/rational.hpp"

namespace turan {

// Exact extremal values t_a^i for the clique bound a, i = a..n_max:
//   t_a^a = C(a,2) - 1,   t_a^{i+1} = floor((i+1) * t_a^i / (i-1)).
struct ExtremalTable {
  int a = 0;
  std::vector<std::pair<int, std::int64_t>> rows;  // (i, t_a^i)
};

ExtremalTable t_table(int a, int n_max);

// Maximum edge count of an a-clique-free graph on n vertices (r = 2),
// evaluated through the t-recurrence. Exact.
std::int64_t ex_exact(int n, int a);

// The complete (a-1)-partite graph on [n] with part sizes as equal as
// possible; attains ex_exact(n, a) and is a-clique-free.
EdgeSet turan_graph(int n, int a);

// The classical bound (1 - 1/(a-1)) n^2 / 2 as an exact rational.
Rational turan_bound(int n, int a);

struct OracleOptions {
  bool enumerate_optima = true;  // if false only the value (plus one witness)
  std::uint64_t optima_cap = 0;  // 0 means limits::max_optima()
};

struct OracleResult {
  std::int64_t value = 0;       // max of sum(w_e x_e) over clique-free subsets
  std::vector<EdgeSet> optima;  // all maximizers, normalized order
  std::uint64_t node_count = 0;
  bool truncated = false;       // optima hit the cap; the value is still exact
};

// Brute-force weighted Turan maximum over an arbitrary support: the total
// weight minus the minimum weight of an edge set hitting every a-clique whose
// edges all lie in the support. Exact branch and bound; deterministic value
// and optima set. Weights are per support edge in ascending rank order; an
// empty span means unit weights.
OracleResult ex_oracle(const EdgeSet& support, int a,
                       std::span<const std::int64_t> weights = {},
                       const OracleOptions& options = {});

}  // namespace turan
