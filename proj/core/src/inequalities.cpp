#include "turan/inequalities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "turan/limits.hpp"

namespace turan {

LinearInequality::LinearInequality(int n_, int r_,
                                   std::map<std::uint64_t, std::int64_t> cs,
                                   std::int64_t rhs_, std::string label_)
    : n(n_), r(r_), coeffs(std::move(cs)), rhs(rhs_), label(std::move(label_)) {
  CompleteHypergraph ambient(n, r);
  if (rhs <= 0)
    throw std::invalid_argument("inequality right-hand side must be positive");
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second < 0)
      throw std::invalid_argument("inequality coefficients must be >= 0");
    if (it->first >= ambient.edge_count())
      throw std::invalid_argument("coefficient rank outside edge universe");
    if (it->second == 0)
      it = coeffs.erase(it);
    else
      ++it;
  }
}

std::int64_t LinearInequality::coeff(std::uint64_t rank) const {
  auto it = coeffs.find(rank);
  return it == coeffs.end() ? 0 : it->second;
}

EdgeSet LinearInequality::support(int ambient_n) const {
  int nn = std::max(n, ambient_n);
  EdgeSet out{CompleteHypergraph(nn, r)};
  for (const auto& [rank, c] : coeffs) out.set(rank, true);
  return out;
}

std::int64_t LinearInequality::lhs_at(const EdgeSet& x) const {
  if (x.ambient().r != r)
    throw std::invalid_argument("point uniformity does not match inequality");
  std::int64_t total = 0;
  for (const auto& [rank, c] : coeffs)
    if (rank < x.universe_size() && x.test(rank)) total += c;
  return total;
}

void CGDerivation::verify() const {
  std::set<std::uint64_t> ranks;
  for (const auto& [rank, c] : target.coeffs) ranks.insert(rank);
  for (const auto& source : sources) {
    if (source.ineq.r != target.r)
      throw std::logic_error("derivation mixes uniformities");
    if (source.weight < 0)
      throw std::logic_error("derivation weights must be nonnegative");
    for (const auto& [rank, c] : source.ineq.coeffs) ranks.insert(rank);
  }
  for (std::uint64_t rank : ranks) {
    Rational sum = 0;
    for (const auto& source : sources)
      sum += source.weight * source.ineq.coeff(rank);
    if (sum != Rational(target.coeff(rank)))
      throw std::logic_error(
          "derivation coefficients do not reproduce the target at rank " +
          std::to_string(rank));
  }
  Rational rhs_sum = 0;
  for (const auto& source : sources)
    rhs_sum += source.weight * source.ineq.rhs;
  if (floor_rational(rhs_sum) != BigInt(target.rhs))
    throw std::logic_error(
        "floored right-hand side does not reproduce the target");
}

BlowupSpec::BlowupSpec(int n_, int a_, std::map<Vertex, int> mult)
    : n(n_), a(a_), multiplicities(std::move(mult)) {
  if (a < 3) throw std::invalid_argument("clique bound a must be at least 3");
  if (n < a) throw std::invalid_argument("need n >= a");
  int total_extra = 0;
  for (const auto& [v, m] : multiplicities) {
    if (v < 1 || v > n)
      throw std::invalid_argument("multiplicity for vertex outside [n]");
    if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    total_extra += m - 1;
  }
  if (total_extra < 1)
    throw std::invalid_argument(
        "blow-up must duplicate at least one vertex (sum of m_v - 1 >= 1)");
}

int BlowupSpec::multiplicity(Vertex v) const {
  auto it = multiplicities.find(v);
  return it == multiplicities.end() ? 1 : it->second;
}

int BlowupSpec::blown_up_n() const {
  int total = n;
  for (const auto& [v, m] : multiplicities) total += m - 1;
  return total;
}

namespace {

std::int64_t clique_rhs(int s, int a, int r) {
  if (r == 2) return ex_exact(s, a);
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::int64_t> cache;
  std::scoped_lock lock(mutex);
  auto key = std::make_tuple(s, a, r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  OracleOptions opts;
  opts.enumerate_optima = false;
  std::int64_t value = ex_oracle(EdgeSet::complete(s, r), a, {}, opts).value;
  cache.emplace(key, value);
  return value;
}

std::string join_vertices(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ',';
    out << vs[i];
  }
  return out.str();
}

std::int64_t ceil_div(std::int64_t x, std::int64_t y) {
  return (x + y - 1) / y;
}

}  // namespace

LinearInequality clique_inequality(std::span<const Vertex> S, int a, int r,
                                   int ambient_n) {
  if (static_cast<int>(S.size()) < a)
    throw std::invalid_argument("clique inequality needs |S| >= a");
  std::vector<Vertex> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  int n = std::max(ambient_n, sorted.back());
  EdgeSet edges = clique_edge_set(sorted, r, n);
  std::map<std::uint64_t, std::int64_t> coeffs;
  for (std::uint64_t rank : edges.edge_ranks()) coeffs[rank] = 1;
  std::int64_t rhs = clique_rhs(static_cast<int>(sorted.size()), a, r);
  std::ostringstream label;
  label << "clique(a=" << a << ",S={" << join_vertices(sorted) << "})";
  return LinearInequality(n, r, std::move(coeffs), rhs, label.str());
}

LinearInequality doubling_inequality(int n, int a, Vertex v) {
  if (a < 3) throw std::invalid_argument("clique bound a must be at least 3");
  if (a > n) throw std::invalid_argument("need a <= n");
  if (v < 1 || v > n) throw std::invalid_argument("vertex v outside [n]");
  std::map<std::uint64_t, std::int64_t> coeffs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex w = u + 1; w <= n; ++w)
      coeffs[rank_edge(Edge{u, w})] = (u == v || w == v) ? 2 : 1;
  std::ostringstream label;
  label << "doubling(v=" << v << ",a=" << a << ")";
  return LinearInequality(n, 2, std::move(coeffs), ex_exact(n + 1, a),
                          label.str());
}

LinearInequality blowup_inequality(const BlowupSpec& spec) {
  std::map<std::uint64_t, std::int64_t> coeffs;
  for (Vertex u = 1; u <= spec.n; ++u)
    for (Vertex w = u + 1; w <= spec.n; ++w)
      coeffs[rank_edge(Edge{u, w})] =
          std::int64_t{1} * spec.multiplicity(u) * spec.multiplicity(w);
  std::ostringstream label;
  label << "blowup(a=" << spec.a << ",m={";
  bool first = true;
  for (const auto& [v, m] : spec.multiplicities) {
    if (m == 1) continue;
    if (!first) label << ',';
    label << v << ':' << m;
    first = false;
  }
  label << "})";
  return LinearInequality(spec.n, 2, std::move(coeffs),
                          ex_exact(spec.blown_up_n(), spec.a), label.str());
}

LinearInequality wheel_inequality(const WheelSpec& spec) {
  EdgeSet edges = wheel_edge_set(spec);
  std::map<std::uint64_t, std::int64_t> coeffs;
  for (std::uint64_t rank : edges.edge_ranks()) coeffs[rank] = 1;
  std::int64_t rhs =
      static_cast<std::int64_t>(binomial(spec.a - 1, spec.r - 1)) *
          (spec.l - 1) -
      ceil_div(spec.l - 1, spec.a - spec.r + 1);
  std::ostringstream label;
  label << "wheel(l=" << spec.l << ",a=" << spec.a << ",r=" << spec.r << ")";
  return LinearInequality(spec.l, spec.r, std::move(coeffs), rhs, label.str());
}

LinearInequality web_inequality(const WebSpec& spec) {
  EdgeSet edges = web_edge_set(spec);
  std::map<std::uint64_t, std::int64_t> coeffs;
  for (std::uint64_t rank : edges.edge_ranks()) coeffs[rank] = 1;
  std::int64_t rhs =
      static_cast<std::int64_t>(binomial(spec.a - 1, spec.r - 1)) * spec.l -
      ceil_div(spec.l, spec.a - spec.r + 1);
  std::ostringstream label;
  label << "web(l=" << spec.l << ",a=" << spec.a << ",r=" << spec.r << ")";
  return LinearInequality(spec.l, spec.r, std::move(coeffs), rhs, label.str());
}

LinearInequality edge_bound(const Edge& edge, int ambient_n) {
  std::map<std::uint64_t, std::int64_t> coeffs;
  coeffs[rank_edge(edge)] = 1;
  return LinearInequality(ambient_n, edge.r(), std::move(coeffs), 1,
                          "edge_bound(" + edge.to_string() + ")");
}

ValidityReport check_validity(const LinearInequality& ineq, int a) {
  EdgeSet support = ineq.support();
  std::vector<std::int64_t> weights;
  for (const auto& [rank, c] : ineq.coeffs) weights.push_back(c);
  OracleOptions opts;
  opts.enumerate_optima = false;
  OracleResult oracle = ex_oracle(support, a, weights, opts);
  ValidityReport report;
  report.max_lhs = oracle.value;
  report.rhs = ineq.rhs;
  report.valid = oracle.value <= ineq.rhs;
  if (!report.valid && !oracle.optima.empty())
    report.violator = oracle.optima.front();
  return report;
}

namespace {

// Shared machinery for wheel and web witnesses. The cycle has `cycle_len`
// vertices; clique i covers windows of `window` consecutive cycle vertices;
// `removal_edge(s)` is the edge whose removal kills the most cliques, placed
// at cycle position s.
struct WitnessPlan {
  int cycle_len;
  int stride;
  std::vector<int> clique_count;  // cliques indexed 1..cycle_len
};

EdgeSet build_witness(const EdgeSet& all_edges, int cycle_len, int stride,
                      WitnessKind kind,
                      const std::function<Edge(int)>& removal_edge,
                      std::int64_t expected_size, int a,
                      const std::string& what) {
  EdgeSet result = all_edges;
  int n = all_edges.ambient().n;
  int r = all_edges.ambient().r;
  int k = cycle_len / stride;
  for (int i = 1; i <= k; ++i) {
    Edge e = removal_edge(i * stride);
    result.set(rank_edge(e), false);
  }
  if (kind == WitnessKind::I) {
    if (cycle_len % stride != 0) {
      Edge e = removal_edge(cycle_len);
      result.set(rank_edge(e), false);
    }
  } else {
    // intersect the edge sets of every clique still fully present
    std::optional<EdgeSet> common;
    for (const auto& clique : enumerate_cliques(n, r, a)) {
      EdgeSet mask = clique_edge_set(clique, r, n);
      if (!result.contains_all(mask)) continue;
      if (!common)
        common = mask;
      else
        *common &= mask;
    }
    if (!common)
      throw std::runtime_error(
          "type II witness unavailable for " + what +
          ": no clique remains full after the stride removals");
    std::vector<std::uint64_t> candidates = common->edge_ranks();
    if (candidates.empty())
      throw std::runtime_error(
          "type II witness unavailable for " + what +
          ": no single edge lies in every remaining full clique");
    result.set(candidates.front(), false);
  }
  // construction is validated, never trusted: a failure here means the
  // closed-form target is not attainable by the stride construction
  if (result.size() != static_cast<std::uint64_t>(expected_size))
    throw std::runtime_error(what + " witness misses the target size " +
                             std::to_string(expected_size));
  if (!is_clique_free(result, a))
    throw std::runtime_error(what +
                             " witness construction leaves a full clique");
  return result;
}

}  // namespace

EdgeSet wheel_witness(const WheelSpec& spec, WitnessKind kind) {
  int cycle_len = spec.cycle_length();
  int stride = spec.a - spec.r + 1;
  auto removal_edge = [&spec, cycle_len](int s) {
    // spoke on r-1 consecutive cycle vertices starting at s, plus the hub
    std::vector<Vertex> vs;
    for (int k = 0; k < spec.r - 1; ++k) {
      int v = (s + k - 1) % cycle_len + 1;
      vs.push_back(v);
    }
    vs.push_back(spec.l);
    std::sort(vs.begin(), vs.end());
    return Edge(std::move(vs));
  };
  return build_witness(wheel_edge_set(spec), cycle_len, stride, kind,
                       removal_edge, wheel_inequality(spec).rhs, spec.a,
                       "wheel(l=" + std::to_string(spec.l) + ")");
}

EdgeSet web_witness(const WebSpec& spec, WitnessKind kind) {
  int cycle_len = spec.l;
  int stride = spec.a - spec.r + 1;
  auto removal_edge = [&spec, cycle_len](int s) {
    // r consecutive cycle vertices starting at s
    std::vector<Vertex> vs;
    for (int k = 0; k < spec.r; ++k) {
      int v = (s + k - 1) % cycle_len + 1;
      vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    return Edge(std::move(vs));
  };
  return build_witness(web_edge_set(spec), cycle_len, stride, kind,
                       removal_edge, web_inequality(spec).rhs, spec.a,
                       "web(l=" + std::to_string(spec.l) + ")");
}

CGDerivation cg_subset_step(std::span<const Vertex> S, int a) {
  if (static_cast<int>(S.size()) <= a)
    throw std::invalid_argument("subset step needs |S| > a");
  std::vector<Vertex> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  int j = static_cast<int>(sorted.size()) - 1;  // |S| = j + 1
  int ambient_n = sorted.back();

  CGDerivation derivation;
  Rational weight(1, j - 1);
  for (std::size_t drop = 0; drop < sorted.size(); ++drop) {
    std::vector<Vertex> subset;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (i != drop) subset.push_back(sorted[i]);
    derivation.sources.push_back(
        {clique_inequality(subset, a, 2, ambient_n), weight});
  }
  derivation.target = clique_inequality(sorted, a, 2, ambient_n);
  derivation.verify();
  return derivation;
}

CGDerivation cg_doubling_aggregate(int n, int a) {
  if (a < 3) throw std::invalid_argument("clique bound a must be at least 3");
  if (a > n) throw std::invalid_argument("need a <= n");
  CGDerivation derivation;
  Rational weight(1, n + 2);
  for (Vertex v = 1; v <= n; ++v)
    derivation.sources.push_back({doubling_inequality(n, a, v), weight});

  std::map<std::uint64_t, std::int64_t> coeffs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex w = u + 1; w <= n; ++w) coeffs[rank_edge(Edge{u, w})] = 1;
  BigInt rhs = BigInt(n) * ex_exact(n + 1, a) / (n + 2);
  std::ostringstream label;
  label << "cg_doubling(n=" << n << ",a=" << a << ")";
  derivation.target =
      LinearInequality(n, 2, std::move(coeffs),
                       static_cast<std::int64_t>(rhs), label.str());
  derivation.verify();
  return derivation;
}

CGDerivation cg_wheel_derivation(const WheelSpec& spec) {
  CGDerivation derivation;
  Rational clique_weight(1, spec.a - spec.r + 1);
  for (int i = 1; i <= spec.cycle_length(); ++i)
    derivation.sources.push_back(
        {clique_inequality(wheel_clique(spec, i), spec.a, spec.r, spec.l),
         clique_weight});
  for (const Edge& e : wheel_edge_set(spec).edges()) {
    int span = wheel_edge_span(spec, e);
    Rational weight(span - spec.r + 1, spec.a - spec.r + 1);
    derivation.sources.push_back({edge_bound(e, spec.l), weight});
  }
  derivation.target = wheel_inequality(spec);
  derivation.verify();
  return derivation;
}

EdgeSet blowup_edge_set(const EdgeSet& g, const BlowupSpec& spec) {
  if (g.ambient().r != 2)
    throw std::invalid_argument("blow-up is defined for graphs (r = 2)");
  if (g.ambient().n != spec.n)
    throw std::invalid_argument("blow-up spec does not match the graph");

  // copies of v: v itself plus fresh labels appended after n
  std::vector<std::vector<Vertex>> copies(spec.n + 1);
  int next = spec.n + 1;
  for (Vertex v = 1; v <= spec.n; ++v) {
    copies[v].push_back(v);
    for (int c = 1; c < spec.multiplicity(v); ++c) copies[v].push_back(next++);
  }
  EdgeSet out{CompleteHypergraph(spec.blown_up_n(), 2)};
  for (const Edge& e : g.edges()) {
    for (Vertex cu : copies[e.vertices[0]])
      for (Vertex cw : copies[e.vertices[1]])
        out.insert(Edge{std::min(cu, cw), std::max(cu, cw)});
  }
  return out;
}

}  // namespace turan
