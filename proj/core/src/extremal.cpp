#include "turan/extremal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>

#include "turan/limits.hpp"

namespace turan {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("64-bit multiply overflow in t-recurrence");
  return out;
}

constexpr int kBigIntThreshold = 10000;

}  // namespace

ExtremalTable t_table(int a, int n_max) {
  if (a < 3) throw std::invalid_argument("clique bound a must be at least 3");
  if (n_max < a) throw std::invalid_argument("need n_max >= a");
  ExtremalTable table;
  table.a = a;
  table.rows.reserve(n_max - a + 1);
  if (n_max <= kBigIntThreshold) {
    std::int64_t t = static_cast<std::int64_t>(binomial(a, 2)) - 1;
    table.rows.emplace_back(a, t);
    for (int i = a; i < n_max; ++i) {
      t = checked_mul(i + 1, t) / (i - 1);
      table.rows.emplace_back(i + 1, t);
    }
  } else {
    // big-integer lane: intermediates can't overflow, values are range-checked
    BigInt t = BigInt(binomial(a, 2)) - 1;
    auto append = [&table](int i, const BigInt& value) {
      if (value > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("t-value exceeds 64 bits at i=" +
                                  std::to_string(i));
      table.rows.emplace_back(i, static_cast<std::int64_t>(value));
    };
    append(a, t);
    for (int i = a; i < n_max; ++i) {
      t = (BigInt(i + 1) * t) / (i - 1);
      append(i + 1, t);
    }
  }
  return table;
}

std::int64_t ex_exact(int n, int a) {
  if (a < 3) throw std::invalid_argument("clique bound a must be at least 3");
  if (n < a) throw std::invalid_argument("need n >= a");
  return t_table(a, n).rows.back().second;
}

EdgeSet turan_graph(int n, int a) {
  if (a < 3) throw std::invalid_argument("clique bound a must be at least 3");
  if (n < a) throw std::invalid_argument("need n >= a");
  int parts = a - 1;
  int base = n / parts;
  int bigger = n % parts;  // this many parts of size base+1, assigned first
  std::vector<int> part_of(n + 1, 0);
  int vertex = 1;
  for (int p = 0; p < parts; ++p) {
    int size = base + (p < bigger ? 1 : 0);
    for (int k = 0; k < size; ++k) part_of[vertex++] = p;
  }
  EdgeSet out{CompleteHypergraph(n, 2)};
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex w = u + 1; w <= n; ++w)
      if (part_of[u] != part_of[w]) out.insert(Edge{u, w});
  return out;
}

Rational turan_bound(int n, int a) {
  if (a < 3) throw std::invalid_argument("clique bound a must be at least 3");
  if (n < a) throw std::invalid_argument("need n >= a");
  return Rational(BigInt(a - 2) * n * n, BigInt(2) * (a - 1));
}

namespace {

// Minimum-weight hitting set search over the cliques fully contained in a
// support. Works on local edge indices 0..m-1; masks are flat word arrays.
//
// Branching: pick the uncovered clique with the fewest removable edges (ties
// to the lowest clique label) and branch on which of its edges to remove,
// forbidding already-tried edges so subtrees are disjoint. Lower bound:
// greedy packing of uncovered cliques with pairwise disjoint removable edge
// sets, each contributing its cheapest removable edge.
class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<std::vector<std::uint64_t>> clique_masks,
                   std::vector<std::int64_t> weights, int edge_count,
                   bool enumerate, std::uint64_t cap)
      : masks_(std::move(clique_masks)),
        weights_(std::move(weights)),
        m_(edge_count),
        words_((edge_count + 63) / 64),
        enumerate_(enumerate),
        cap_(cap),
        removed_(words_, 0),
        forbidden_(words_, 0) {
    cover_count_.assign(masks_.size(), 0);
    edge_cliques_.assign(m_, {});
    for (std::size_t c = 0; c < masks_.size(); ++c)
      for (int e : bits(masks_[c])) edge_cliques_[e].push_back(c);
    uncovered_ = static_cast<int>(masks_.size());
  }

  void run() { dfs(); }

  std::optional<std::int64_t> best_weight() const { return best_; }
  const std::vector<std::vector<std::uint64_t>>& best_sets() const {
    return best_sets_;
  }
  std::uint64_t nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }

 private:
  std::vector<int> bits(const std::vector<std::uint64_t>& mask) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = mask[w];
      while (word) {
        out.push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
    return out;
  }

  bool edge_in(const std::vector<std::uint64_t>& mask, int e) const {
    return (mask[e / 64] >> (e % 64)) & 1u;
  }

  // Cheapest removable edge of an uncovered clique, or nullopt if none left.
  std::optional<std::int64_t> min_avail_weight(std::size_t c) const {
    std::optional<std::int64_t> best;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = masks_[c][w] & ~forbidden_[w];
      while (word) {
        int e = w * 64 + std::countr_zero(word);
        word &= word - 1;
        if (!best || weights_[e] < *best) best = weights_[e];
      }
    }
    return best;
  }

  int avail_count(std::size_t c) const {
    int count = 0;
    for (int w = 0; w < words_; ++w)
      count += std::popcount(masks_[c][w] & ~forbidden_[w]);
    return count;
  }

  // Greedy disjoint packing of uncovered cliques. Returns nullopt when some
  // uncovered clique has no removable edge left (dead branch).
  std::optional<std::int64_t> lower_bound() const {
    std::vector<std::uint64_t> packing(words_, 0);
    std::int64_t bound = 0;
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      if (cover_count_[c] > 0) continue;
      bool disjoint = true;
      bool any_avail = false;
      std::int64_t cheapest = 0;
      bool have_cheapest = false;
      for (int w = 0; w < words_; ++w) {
        std::uint64_t avail = masks_[c][w] & ~forbidden_[w];
        if (avail & packing[w]) disjoint = false;
        std::uint64_t word = avail;
        while (word) {
          int e = w * 64 + std::countr_zero(word);
          word &= word - 1;
          any_avail = true;
          if (!have_cheapest || weights_[e] < cheapest) {
            cheapest = weights_[e];
            have_cheapest = true;
          }
        }
      }
      if (!any_avail) return std::nullopt;
      if (disjoint) {
        bound += cheapest;
        for (int w = 0; w < words_; ++w)
          packing[w] |= masks_[c][w] & ~forbidden_[w];
      }
    }
    return bound;
  }

  void remove_edge(int e, int delta) {
    std::uint64_t bit = std::uint64_t{1} << (e % 64);
    if (delta > 0)
      removed_[e / 64] |= bit;
    else
      removed_[e / 64] &= ~bit;
    removed_weight_ += delta * weights_[e];
    for (int c : edge_cliques_[e]) {
      if (delta > 0) {
        if (cover_count_[c]++ == 0) --uncovered_;
      } else {
        if (--cover_count_[c] == 0) ++uncovered_;
      }
    }
  }

  void record() {
    std::int64_t w = removed_weight_;
    if (!best_ || w < *best_) {
      best_ = w;
      best_sets_.clear();
      truncated_ = false;
      best_sets_.push_back(removed_);
      return;
    }
    if (w == *best_) {
      if (!enumerate_) return;  // keep the single witness already stored
      if (best_sets_.size() < cap_)
        best_sets_.push_back(removed_);
      else
        truncated_ = true;
    }
  }

  void dfs() {
    ++nodes_;
    if (uncovered_ == 0) {
      record();
      return;
    }
    auto lb = lower_bound();
    if (!lb) return;
    if (best_) {
      std::int64_t limit = enumerate_ ? *best_ : *best_ - 1;
      if (removed_weight_ + *lb > limit) return;
    }
    // most constrained uncovered clique, lowest label on ties
    std::size_t pick = masks_.size();
    int pick_avail = std::numeric_limits<int>::max();
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      if (cover_count_[c] > 0) continue;
      int avail = avail_count(c);
      if (avail < pick_avail) {
        pick_avail = avail;
        pick = c;
        if (avail <= 1) break;
      }
    }
    if (pick == masks_.size() || pick_avail == 0) return;

    std::vector<int> branch_edges;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = masks_[pick][w] & ~forbidden_[w];
      while (word) {
        branch_edges.push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
    std::vector<int> locally_forbidden;
    for (int e : branch_edges) {
      remove_edge(e, +1);
      dfs();
      remove_edge(e, -1);
      forbidden_[e / 64] |= std::uint64_t{1} << (e % 64);
      locally_forbidden.push_back(e);
    }
    for (int e : locally_forbidden)
      forbidden_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }

  std::vector<std::vector<std::uint64_t>> masks_;
  std::vector<std::int64_t> weights_;
  int m_;
  int words_;
  bool enumerate_;
  std::uint64_t cap_;

  std::vector<std::uint64_t> removed_, forbidden_;
  std::vector<std::vector<int>> edge_cliques_;
  std::vector<int> cover_count_;
  int uncovered_ = 0;
  std::int64_t removed_weight_ = 0;

  std::optional<std::int64_t> best_;
  std::vector<std::vector<std::uint64_t>> best_sets_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
};

}  // namespace

OracleResult ex_oracle(const EdgeSet& support, int a,
                       std::span<const std::int64_t> weights,
                       const OracleOptions& options) {
  int n = support.ambient().n;
  int r = support.ambient().r;
  if (a <= r) throw std::invalid_argument("oracle needs a > r");

  std::vector<std::uint64_t> support_ranks = support.edge_ranks();
  int m = static_cast<int>(support_ranks.size());
  std::vector<std::int64_t> w(m, 1);
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != m)
      throw std::invalid_argument(
          "weight count does not match support edge count");
    for (int i = 0; i < m; ++i) {
      if (weights[i] < 0)
        throw std::invalid_argument("oracle weights must be nonnegative");
      w[i] = weights[i];
    }
  }

  // local index per support rank
  std::vector<int> local_of_rank(support.universe_size(), -1);
  for (int i = 0; i < m; ++i) local_of_rank[support_ranks[i]] = i;

  // cliques of the ambient that live entirely inside the support
  int word_count = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks;
  if (a <= n) {
    for (const auto& clique : enumerate_cliques(n, r, a)) {
      EdgeSet clique_edges = clique_edge_set(clique, r, n);
      if (!support.contains_all(clique_edges)) continue;
      std::vector<std::uint64_t> mask(word_count, 0);
      for (std::uint64_t rank : clique_edges.edge_ranks()) {
        int e = local_of_rank[rank];
        mask[e / 64] |= std::uint64_t{1} << (e % 64);
      }
      masks.push_back(std::move(mask));
    }
  }

  std::int64_t total = 0;
  for (std::int64_t weight : w) total += weight;

  std::uint64_t cap =
      options.optima_cap ? options.optima_cap : limits::max_optima();

  OracleResult result;
  if (masks.empty()) {
    result.value = total;
    result.optima.push_back(support);
    result.node_count = 1;
    return result;
  }

  HittingSetSearch search(std::move(masks), w, m, options.enumerate_optima,
                          cap);
  search.run();
  if (!search.best_weight())
    throw std::logic_error("hitting-set search found no cover");

  result.value = total - *search.best_weight();
  result.node_count = search.nodes();
  result.truncated = search.truncated();

  // complements of the minimum hitting sets, expanded over zero-weight edges
  std::vector<EdgeSet> optima;
  bool has_zero_weight =
      std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
  for (const auto& removed : search.best_sets()) {
    EdgeSet opt = support;
    std::vector<int> kept_zero;
    for (int e = 0; e < m; ++e) {
      if ((removed[e / 64] >> (e % 64)) & 1u)
        opt.set(support_ranks[e], false);
      else if (w[e] == 0)
        kept_zero.push_back(e);
    }
    if (!has_zero_weight || kept_zero.empty()) {
      optima.push_back(std::move(opt));
      continue;
    }
    // dropping any subset of kept zero-weight edges preserves the value
    if (kept_zero.size() >= 63 ||
        (std::uint64_t{1} << kept_zero.size()) > cap) {
      result.truncated = true;
      optima.push_back(std::move(opt));
      continue;
    }
    std::uint64_t subsets = std::uint64_t{1} << kept_zero.size();
    for (std::uint64_t bitset = 0; bitset < subsets; ++bitset) {
      EdgeSet variant = opt;
      for (std::size_t i = 0; i < kept_zero.size(); ++i)
        if ((bitset >> i) & 1u)
          variant.set(support_ranks[kept_zero[i]], false);
      optima.push_back(std::move(variant));
    }
  }
  std::sort(optima.begin(), optima.end());
  optima.erase(std::unique(optima.begin(), optima.end()), optima.end());
  if (optima.size() > cap) {
    optima.erase(optima.begin() + cap, optima.end());
    result.truncated = true;
  }
  result.optima = std::move(optima);
  return result;
}

}  // namespace turan
