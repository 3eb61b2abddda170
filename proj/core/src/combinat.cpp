#include "turan/combinat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "turan/limits.hpp"

namespace turan {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    // den now divides the running result: result*num/den is C(n-k+i, i)
    result /= den;
    if (num != 0 && result > UINT64_MAX / num)
      throw std::overflow_error("binomial overflows 64 bits");
    result *= num;
  }
  return result;
}

Edge::Edge(std::initializer_list<Vertex> vs) : Edge(std::vector<Vertex>(vs)) {}

Edge::Edge(std::vector<Vertex> vs) : vertices(std::move(vs)) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 1)
      throw std::invalid_argument("edge vertices must be positive");
    if (i > 0 && vertices[i] <= vertices[i - 1])
      throw std::invalid_argument("edge vertices must be strictly increasing");
  }
}

std::string Edge::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out << ',';
    out << vertices[i];
  }
  out << ')';
  return out.str();
}

CompleteHypergraph::CompleteHypergraph(int n_, int r_) : n(n_), r(r_) {
  if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
  if (n < r) throw std::invalid_argument("need n >= r vertices");
  std::uint64_t universe = binomial(n, r);
  if (universe > limits::max_edges())
    throw CapExceeded("edge universe C(" + std::to_string(n) + "," +
                      std::to_string(r) + ") exceeds the configured cap of " +
                      std::to_string(limits::max_edges()));
}

std::uint64_t rank_edge(const Edge& edge) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < edge.vertices.size(); ++i)
    rank += binomial(static_cast<std::uint64_t>(edge.vertices[i]) - 1, i + 1);
  return rank;
}

Edge unrank_edge(std::uint64_t rank, int n, int r) {
  CompleteHypergraph ambient(n, r);  // validates n, r and the cap
  if (rank >= ambient.edge_count())
    throw std::out_of_range("edge rank " + std::to_string(rank) +
                            " out of range for C(" + std::to_string(n) + "," +
                            std::to_string(r) + ")");
  std::vector<Vertex> vs(r);
  std::uint64_t rest = rank;
  int hi = n;
  for (int i = r; i >= 1; --i) {
    // largest c with C(c, i) <= rest, scanned downward from the previous digit
    int c = hi - 1;
    while (binomial(c, i) > rest) --c;
    vs[i - 1] = c + 1;
    rest -= binomial(c, i);
    hi = c + 1;
  }
  return Edge(std::move(vs));
}

EdgeSet::EdgeSet(CompleteHypergraph ambient)
    : ambient_(ambient),
      universe_(ambient.edge_count()),
      words_((universe_ + 63) / 64, 0) {}

EdgeSet EdgeSet::complete(int n, int r) {
  EdgeSet all{CompleteHypergraph(n, r)};
  std::uint64_t universe = all.universe_size();
  for (std::size_t i = 0; i < all.words_.size(); ++i) all.words_[i] = ~0ull;
  if (universe % 64 != 0)
    all.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  return all;
}

bool EdgeSet::test(std::uint64_t rank) const {
  if (rank >= universe_) throw std::out_of_range("edge rank out of range");
  return (words_[rank / 64] >> (rank % 64)) & 1u;
}

void EdgeSet::set(std::uint64_t rank, bool value) {
  if (rank >= universe_) throw std::out_of_range("edge rank out of range");
  std::uint64_t mask = std::uint64_t{1} << (rank % 64);
  if (value)
    words_[rank / 64] |= mask;
  else
    words_[rank / 64] &= ~mask;
}

void EdgeSet::insert(const Edge& edge) {
  if (edge.r() != ambient_.r)
    throw std::invalid_argument("edge uniformity does not match ambient");
  if (edge.vertices.back() > ambient_.n)
    throw std::invalid_argument("edge vertex exceeds ambient n");
  set(rank_edge(edge), true);
}

bool EdgeSet::contains(const Edge& edge) const {
  if (edge.r() != ambient_.r || edge.vertices.back() > ambient_.n)
    return false;
  return test(rank_edge(edge));
}

std::uint64_t EdgeSet::size() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

void EdgeSet::check_same_ambient(const EdgeSet& other) const {
  if (!(ambient_ == other.ambient_))
    throw std::invalid_argument("edge sets live in different ambients");
}

bool EdgeSet::contains_all(const EdgeSet& other) const {
  check_same_ambient(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((other.words_[i] & ~words_[i]) != 0) return false;
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  check_same_ambient(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  check_same_ambient(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  check_same_ambient(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::subtract(const EdgeSet& other) {
  check_same_ambient(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::uint64_t> EdgeSet::edge_ranks() const {
  std::vector<std::uint64_t> ranks;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      int bit = std::countr_zero(word);
      ranks.push_back(w * 64 + bit);
      word &= word - 1;
    }
  }
  return ranks;
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> result;
  for (std::uint64_t rank : edge_ranks())
    result.push_back(unrank_edge(rank, ambient_.n, ambient_.r));
  return result;
}

bool EdgeSet::operator<(const EdgeSet& other) const {
  if (!(ambient_ == other.ambient_))
    return std::tie(ambient_.n, ambient_.r) <
           std::tie(other.ambient_.n, other.ambient_.r);
  return words_ < other.words_;
}

std::vector<std::vector<Vertex>> enumerate_cliques(int n, int r, int a) {
  if (a <= r)
    throw std::invalid_argument(
        "no clique constraint exists for a <= r (every edge is a clique)");
  std::vector<std::vector<Vertex>> result;
  if (a > n) return result;
  // colex order: repeatedly bump the lowest position that can grow
  std::vector<Vertex> cur(a);
  for (int i = 0; i < a; ++i) cur[i] = i + 1;
  while (true) {
    result.push_back(cur);
    int i = 0;
    while (i < a) {
      Vertex next = (i + 1 < a) ? cur[i + 1] : Vertex(n + 1);
      if (cur[i] + 1 < next) break;
      ++i;
    }
    if (i == a) break;
    ++cur[i];
    for (int j = 0; j < i; ++j) cur[j] = j + 1;
  }
  return result;
}

EdgeSet clique_edge_set(std::span<const Vertex> clique, int r, int ambient_n) {
  if (static_cast<int>(clique.size()) <= r)
    throw std::invalid_argument("clique must have more than r vertices");
  std::vector<Vertex> sorted(clique.begin(), clique.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("clique vertices must be distinct");
  if (sorted.front() < 1 || sorted.back() > ambient_n)
    throw std::invalid_argument("clique vertex outside ambient [n]");

  EdgeSet out{CompleteHypergraph(ambient_n, r)};
  int k = static_cast<int>(sorted.size());
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> vs(r);
    for (int i = 0; i < r; ++i) vs[i] = sorted[idx[i]];
    out.insert(Edge(std::move(vs)));
    int i = r - 1;
    while (i >= 0 && idx[i] == k - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

// Edge masks of every a-clique of K^r_n, cached per (n, r, a). The masks are
// what makes clique-freeness tests and hitting-set searches cheap.
struct CliqueCatalog {
  std::vector<std::vector<Vertex>> cliques;
  std::vector<EdgeSet> masks;
};

const CliqueCatalog& clique_catalog(int n, int r, int a) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<CliqueCatalog>>
      cache;
  std::scoped_lock lock(mutex);
  auto key = std::make_tuple(n, r, a);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto catalog = std::make_unique<CliqueCatalog>();
  catalog->cliques = enumerate_cliques(n, r, a);
  catalog->masks.reserve(catalog->cliques.size());
  for (const auto& clique : catalog->cliques)
    catalog->masks.push_back(clique_edge_set(clique, r, n));
  auto [pos, inserted] = cache.emplace(key, std::move(catalog));
  return *pos->second;
}

}  // namespace

bool is_clique_free(const EdgeSet& edges, int a) {
  int n = edges.ambient().n;
  int r = edges.ambient().r;
  if (a <= r)
    throw std::invalid_argument("clique-freeness needs a > r");
  if (a > n) return true;
  for (const EdgeSet& mask : clique_catalog(n, r, a).masks)
    if (edges.contains_all(mask)) return false;
  return true;
}

WheelSpec::WheelSpec(int l_, int a_, int r_) : l(l_), a(a_), r(r_) {
  if (r < 2) throw std::invalid_argument("wheel needs r >= 2");
  if (a <= r) throw std::invalid_argument("wheel needs a > r");
  if (l < 2 * a - 1)
    throw std::invalid_argument(
        "wheel needs l >= 2a-1, smaller wheels are complete hypergraphs");
}

WebSpec::WebSpec(int l_, int a_, int r_) : l(l_), a(a_), r(r_) {
  if (r < 2) throw std::invalid_argument("web needs r >= 2");
  if (a <= r) throw std::invalid_argument("web needs a > r");
  if (l < 2 * a)
    throw std::invalid_argument(
        "web needs l >= 2a, smaller webs are complete hypergraphs");
}

namespace {

// Reduce a cyclic index into 1..cycle_length, mapping 0 to cycle_length.
Vertex cyclic_vertex(int value, int cycle_length) {
  int m = value % cycle_length;
  if (m <= 0) m += cycle_length;
  return m;
}

}  // namespace

std::vector<Vertex> wheel_clique(const WheelSpec& spec, int i) {
  if (i < 1 || i > spec.cycle_length())
    throw std::out_of_range("wheel clique index out of range");
  std::vector<Vertex> clique;
  for (int k = 0; k < spec.a - 1; ++k)
    clique.push_back(cyclic_vertex(i + k, spec.cycle_length()));
  clique.push_back(spec.l);
  return clique;
}

std::vector<Vertex> web_clique(const WebSpec& spec, int i) {
  if (i < 1 || i > spec.l)
    throw std::out_of_range("web clique index out of range");
  std::vector<Vertex> clique;
  for (int k = 0; k < spec.a; ++k)
    clique.push_back(cyclic_vertex(i + k, spec.l));
  return clique;
}

EdgeSet wheel_edge_set(const WheelSpec& spec) {
  EdgeSet out{CompleteHypergraph(spec.l, spec.r)};
  for (int i = 1; i <= spec.cycle_length(); ++i)
    out |= clique_edge_set(wheel_clique(spec, i), spec.r, spec.l);
  return out;
}

EdgeSet web_edge_set(const WebSpec& spec) {
  EdgeSet out{CompleteHypergraph(spec.l, spec.r)};
  for (int i = 1; i <= spec.l; ++i)
    out |= clique_edge_set(web_clique(spec, i), spec.r, spec.l);
  return out;
}

int cyclic_span(std::span<const Vertex> cycle_vertices, int cycle_length) {
  if (cycle_vertices.empty())
    throw std::invalid_argument("span of an empty vertex set is undefined");
  std::vector<Vertex> sorted(cycle_vertices.begin(), cycle_vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1 || sorted.back() > cycle_length)
    throw std::invalid_argument("vertex outside the cycle");
  // The minimal window skips the largest cyclic gap between occupied spots.
  int max_gap = sorted.front() + cycle_length - sorted.back();
  for (std::size_t i = 1; i < sorted.size(); ++i)
    max_gap = std::max(max_gap, sorted[i] - sorted[i - 1]);
  return cycle_length - max_gap + 1;
}

int wheel_edge_span(const WheelSpec& spec, const Edge& edge) {
  std::vector<Vertex> cycle_part;
  for (Vertex v : edge.vertices)
    if (v != spec.l) cycle_part.push_back(v);
  return cyclic_span(cycle_part, spec.cycle_length());
}

int web_edge_span(const WebSpec& spec, const Edge& edge) {
  return cyclic_span(edge.vertices, spec.l);
}

}  // namespace turan
