#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace turan {

using Vertex = int;  // vertex labels are 1-based

// C(n,k) in checked 64-bit arithmetic; throws std::overflow_error.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// An r-subset of vertices, kept strictly increasing.
struct Edge {
  std::vector<Vertex> vertices;

  Edge() = default;
  Edge(std::initializer_list<Vertex> vs);
  explicit Edge(std::vector<Vertex> vs);

  int r() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Edge&) const = default;
  std::string to_string() const;
};

// The complete r-uniform hypergraph on [n]. Edge coordinates of any graph
// on [n] live inside its C(n,r)-dimensional edge universe.
struct CompleteHypergraph {
  int n = 0;
  int r = 0;

  CompleteHypergraph() = default;
  CompleteHypergraph(int n_, int r_);

  std::uint64_t edge_count() const { return binomial(n, r); }
  bool operator==(const CompleteHypergraph&) const = default;
};

// Colexicographic position of an edge: sum of C(v_i - 1, i). Stable under
// growing n, so coordinates of K_m keep their meaning inside K_n for m <= n.
std::uint64_t rank_edge(const Edge& edge);
Edge unrank_edge(std::uint64_t rank, int n, int r);

// Dense bit-vector over the C(n,r) edge universe, indexed by colex rank.
class EdgeSet {
 public:
  explicit EdgeSet(CompleteHypergraph ambient);

  static EdgeSet complete(int n, int r);

  const CompleteHypergraph& ambient() const { return ambient_; }
  std::uint64_t universe_size() const { return universe_; }

  bool test(std::uint64_t rank) const;
  void set(std::uint64_t rank, bool value = true);
  void insert(const Edge& edge);
  bool contains(const Edge& edge) const;

  std::uint64_t size() const;           // number of edges present
  bool empty() const { return size() == 0; }

  bool contains_all(const EdgeSet& other) const;  // other subset of this
  bool intersects(const EdgeSet& other) const;

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& subtract(const EdgeSet& other);

  std::vector<std::uint64_t> edge_ranks() const;  // ascending
  std::vector<Edge> edges() const;                // ascending by rank

  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const EdgeSet&) const = default;
  // Total order for normalizing enumeration output; low ranks compare first.
  bool operator<(const EdgeSet& other) const;

 private:
  void check_same_ambient(const EdgeSet& other) const;

  CompleteHypergraph ambient_;
  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// All a-subsets of [n] in colex order. a > n yields the empty list; a <= r
// is rejected because no clique constraint exists there.
std::vector<std::vector<Vertex>> enumerate_cliques(int n, int r, int a);

// The C(|clique|, r) edges spanned by a clique, as a set in K^r_n.
EdgeSet clique_edge_set(std::span<const Vertex> clique, int r, int ambient_n);

// True iff no a-subset of [n] has all of its C(a,r) edges inside `edges`.
bool is_clique_free(const EdgeSet& edges, int a);

// Hyperwheel on l vertices: hub l, cycle 1..l-1; every a-1 consecutive
// cycle vertices form an a-clique together with the hub.
struct WheelSpec {
  int l = 0;
  int a = 0;
  int r = 0;

  WheelSpec() = default;
  WheelSpec(int l_, int a_, int r_);
  int cycle_length() const { return l - 1; }
};

// Hyperweb on l cycle vertices: every a consecutive vertices form an
// a-clique. Equivalently the hyperwheel with the hub removed.
struct WebSpec {
  int l = 0;
  int a = 0;
  int r = 0;

  WebSpec() = default;
  WebSpec(int l_, int a_, int r_);
};

EdgeSet wheel_edge_set(const WheelSpec& spec);
EdgeSet web_edge_set(const WebSpec& spec);

// Clique i of the wheel: {i, i+1, ..., i+a-2} on the cycle plus the hub.
// Cyclic indices reduce into 1..l-1, with 0 mapping to l-1.
std::vector<Vertex> wheel_clique(const WheelSpec& spec, int i);

// Clique i of the web: {i, i+1, ..., i+a-1} on the cycle of length l.
std::vector<Vertex> web_clique(const WebSpec& spec, int i);

// Number of vertices in the smallest cyclic window containing the edge's
// cycle vertices (the hub, if present, is ignored). Cycle length is l-1 for
// wheels and l for webs.
int cyclic_span(std::span<const Vertex> cycle_vertices, int cycle_length);
int wheel_edge_span(const WheelSpec& spec, const Edge& edge);
int web_edge_span(const WebSpec& spec, const Edge& edge);

}  // namespace turan
