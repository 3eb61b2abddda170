#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/combinat.hpp"
#include "turan/extremal.hpp"
#include "turan/rational.hpp"

namespace turan {

// sum over edges of coeff_e * x_e <= rhs, with nonnegative integer
// coefficients and a positive right-hand side. Coefficients are stored
// sparsely by colex rank; zero entries are dropped on construction, which
// keeps the representation ambient-stable under growing n.
struct LinearInequality {
  int n = 0;
  int r = 0;
  std::map<std::uint64_t, std::int64_t> coeffs;
  std::int64_t rhs = 0;
  std::string label;

  LinearInequality() = default;
  LinearInequality(int n_, int r_, std::map<std::uint64_t, std::int64_t> cs,
                   std::int64_t rhs_, std::string label_);

  std::int64_t coeff(std::uint64_t rank) const;
  // Edges with positive coefficient, embedded into K^r_{ambient_n}
  // (ambient_n = 0 means the inequality's own n).
  EdgeSet support(int ambient_n = 0) const;
  std::int64_t lhs_at(const EdgeSet& x) const;

  bool operator==(const LinearInequality&) const = default;
};

// One Chvatal-Gomory step: a nonnegative rational combination of valid
// inequalities whose coefficient sum matches the target exactly and whose
// floored right-hand side equals the target's.
struct WeightedSource {
  LinearInequality ineq;
  Rational weight;
};

struct CGDerivation {
  std::vector<WeightedSource> sources;
  LinearInequality target;

  // throws std::logic_error if the combination does not reproduce the target
  void verify() const;
};

// Vertex multiplicities for a blow-up; vertices absent from the map have
// multiplicity one. At least one vertex must be duplicated.
struct BlowupSpec {
  int n = 0;
  int a = 0;
  std::map<Vertex, int> multiplicities;

  BlowupSpec() = default;
  BlowupSpec(int n_, int a_, std::map<Vertex, int> mult);

  int multiplicity(Vertex v) const;
  int blown_up_n() const;  // n + sum of (m_v - 1)
};

// --- generators -----------------------------------------------------------

// sum of x_e over edges inside S <= ex(|S|, a, r). For r = 2 the right-hand
// side comes from the exact formula, otherwise from the brute-force oracle.
LinearInequality clique_inequality(std::span<const Vertex> S, int a, int r,
                                   int ambient_n = 0);

// 2 x_e on edges at v, x_e elsewhere, <= ex(n+1, a): copying v preserves
// clique-freeness.
LinearInequality doubling_inequality(int n, int a, Vertex v);

// Coefficient m_u * m_w on edge (u,w); right-hand side ex(n + sum(m_v - 1), a).
// Restricted to r = 2. Reduces to the doubling inequality when exactly one
// vertex has multiplicity two.
LinearInequality blowup_inequality(const BlowupSpec& spec);

// Unit coefficients on the wheel edges;
// rhs = C(a-1,r-1)(l-1) - ceil((l-1)/(a-r+1)).
LinearInequality wheel_inequality(const WheelSpec& spec);

// Unit coefficients on the web edges; rhs = C(a-1,r-1) l - ceil(l/(a-r+1)).
LinearInequality web_inequality(const WebSpec& spec);

// Upper bound x_e <= 1 for a single edge.
LinearInequality edge_bound(const Edge& edge, int ambient_n);

// --- validity -------------------------------------------------------------

struct ValidityReport {
  bool valid = false;
  std::int64_t max_lhs = 0;
  std::int64_t rhs = 0;
  std::optional<EdgeSet> violator;  // a clique-free set beating rhs, if any
};

// Oracle check that no clique-free subset of the support beats the rhs.
ValidityReport check_validity(const LinearInequality& ineq, int a);

// --- tightness witnesses ---------------------------------------------------

enum class WitnessKind { I, II };

// Clique-free subsets of the wheel/web meeting the inequality with equality.
// Type I removes ceil(L/(a-r+1)) maximally shared edges at stride a-r+1
// around the cycle (L = l-1 for wheels, l for webs); type II removes
// floor(L/(a-r+1)) of them plus one edge common to every remaining full
// clique. Both are re-checked for clique-freeness and equality before being
// returned. Type II throws std::runtime_error when unavailable.
EdgeSet wheel_witness(const WheelSpec& spec, WitnessKind kind);
EdgeSet web_witness(const WebSpec& spec, WitnessKind kind);

// --- Chvatal-Gomory derivations --------------------------------------------

// |S| = j+1 > a: combine the j+1 size-j subset inequalities with weight
// 1/(j-1) each; the floored target is the clique inequality on S.
CGDerivation cg_subset_step(std::span<const Vertex> S, int a);

// Combine the n doubling inequalities with weight 1/(n+2) each; the target
// bounds the total edge count by floor(n ex(n+1,a) / (n+2)).
CGDerivation cg_doubling_aggregate(int n, int a);

// Combine the l-1 wheel-clique inequalities at weight 1/(a-r+1) with the
// edge bounds at weight (span-r+1)/(a-r+1); the floored target is the wheel
// inequality.
CGDerivation cg_wheel_derivation(const WheelSpec& spec);

// --- blow-up support -------------------------------------------------------

// The graph obtained by replacing every vertex v of g with m_v independent
// copies, joining copies of adjacent vertices. Original labels keep their
// place; copies are appended after n.
EdgeSet blowup_edge_set(const EdgeSet& g, const BlowupSpec& spec);

}  // namespace turan
