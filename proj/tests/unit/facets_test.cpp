#include <doctest.h>

#include "turan/facets.hpp"
#include "test_util.hpp"

using namespace turan;

namespace {

std::vector<Vertex> range_vertices(int n) {
  std::vector<Vertex> out(n);
  for (int i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

}  // namespace

TEST_CASE("rational matrix rank") {
  RationalMatrix identity({{Rational(1), Rational(0)},
                           {Rational(0), Rational(1)}});
  CHECK(identity.rank() == 2);
  RationalMatrix dependent({{Rational(1), Rational(2)},
                            {Rational(2), Rational(4)}});
  CHECK(dependent.rank() == 1);
  RationalMatrix with_fractions({{Rational(1, 2), Rational(1, 3)},
                                 {Rational(1, 3), Rational(1, 2)}});
  CHECK(with_fractions.rank() == 2);
  RationalMatrix scaled_row({{Rational(1, 2), Rational(1, 3)},
                             {Rational(3, 2), Rational(1)}});
  CHECK(scaled_row.rank() == 1);
}

TEST_CASE("affine rank of raw points") {
  std::vector<std::vector<Rational>> plane{{Rational(0), Rational(0)},
                                           {Rational(1), Rational(0)},
                                           {Rational(0), Rational(1)}};
  CHECK(affine_rank_dense(plane) == 2);
  std::vector<std::vector<Rational>> single{{Rational(3), Rational(7)}};
  CHECK(affine_rank_dense(single) == 0);
  CHECK_THROWS_AS(affine_rank_dense({}), std::invalid_argument);
}

TEST_CASE("tight points of the K_4 triangle bound are the three 4-cycles") {
  LinearInequality ineq = clique_inequality(range_vertices(4), 3, 2);
  EdgeSet k4 = EdgeSet::complete(4, 2);
  TightPoints tight = tight_points(ineq, 3, k4);
  CHECK(tight.max_lhs == 4);
  REQUIRE(tight.points.size() == 3);
  for (const EdgeSet& p : tight.points) {
    CHECK(p.size() == 4);
    CHECK(is_clique_free(p, 3));
  }
  CHECK(affine_rank(tight.points) == 2);
}

TEST_CASE("single-edge-deleted cliques are the tight points at the base size") {
  for (int a : {3, 4}) {
    LinearInequality ineq = clique_inequality(range_vertices(a), a, 2);
    TightPoints tight = tight_points(ineq, a, EdgeSet::complete(a, 2));
    CHECK(tight.points.size() == binomial(a, 2));
  }
}

TEST_CASE("facet verdicts for clique inequalities") {
  FacetVerdict k5 = is_facet(clique_inequality(range_vertices(5), 3, 2), 3,
                             EdgeSet::complete(5, 2));
  CHECK(k5.valid);
  CHECK(k5.max_lhs == 6);
  CHECK(k5.tight_count == 10);
  CHECK(k5.affine_rank == 9);
  CHECK(k5.ambient_dim == 10);
  CHECK(k5.is_facet);

  FacetVerdict k4 = is_facet(clique_inequality(range_vertices(4), 3, 2), 3,
                             EdgeSet::complete(4, 2));
  CHECK(k4.valid);
  CHECK(k4.tight_count == 3);
  CHECK(k4.affine_rank == 2);
  CHECK(!k4.is_facet);

  FacetVerdict k6 = is_facet(clique_inequality(range_vertices(6), 3, 2), 3,
                             EdgeSet::complete(6, 2));
  CHECK(k6.valid);
  CHECK(k6.tight_count == 10);  // balanced bipartitions of six vertices
  CHECK(!k6.is_facet);

  FacetVerdict k7 = is_facet(clique_inequality(range_vertices(7), 3, 2), 3,
                             EdgeSet::complete(7, 2));
  CHECK(k7.is_facet);
  CHECK(k7.affine_rank == 20);
}

TEST_CASE("facet verdict for the doubling inequality on six vertices") {
  for (Vertex v = 1; v <= 6; ++v) {
    FacetVerdict verdict = is_facet(doubling_inequality(6, 3, v), 3,
                                    EdgeSet::complete(6, 2));
    CHECK(verdict.valid);
    CHECK(verdict.max_lhs == 12);
    // ten balanced bipartitions plus five unbalanced ones with the doubled
    // vertex in the two-element part
    CHECK(verdict.tight_count == 15);
    CHECK(verdict.affine_rank == 14);
    CHECK(verdict.ambient_dim == 15);
    CHECK(verdict.is_facet);
  }
}

TEST_CASE("facet verdicts for wheels and webs on their supports") {
  WheelSpec w632(6, 3, 2);
  FacetVerdict v632 = is_facet(wheel_inequality(w632), 3, wheel_edge_set(w632));
  CHECK(v632.valid);
  CHECK(v632.max_lhs == 7);
  // ten 7-edge triangle-free subsets: five disjoint-spoke-pair covers with a
  // forced rim, plus five three-spoke covers of the cycle
  CHECK(v632.tight_count == 10);
  CHECK(v632.affine_rank == 9);
  CHECK(v632.ambient_dim == 10);
  CHECK(v632.is_facet);

  WheelSpec w832(8, 3, 2);
  FacetVerdict v832 = is_facet(wheel_inequality(w832), 3, wheel_edge_set(w832));
  CHECK(v832.affine_rank == 13);
  CHECK(v832.ambient_dim == 14);
  CHECK(v832.is_facet);

  WebSpec b732(7, 3, 2);
  FacetVerdict v732 = is_facet(web_inequality(b732), 3, web_edge_set(b732));
  CHECK(v732.affine_rank == 13);
  CHECK(v732.ambient_dim == 14);
  CHECK(v732.is_facet);
}

TEST_CASE("wheel facets persist at larger parameters, including r = 3") {
  // cycle length 1 mod (a-r+1) in both cases
  WheelSpec w842(8, 4, 2);
  FacetVerdict v842 = is_facet(wheel_inequality(w842), 4, wheel_edge_set(w842));
  CHECK(v842.is_facet);
  CHECK(v842.affine_rank == 20);
  CHECK(v842.tight_count == 49);

  WheelSpec w843(8, 4, 3);
  FacetVerdict v843 = is_facet(wheel_inequality(w843), 4, wheel_edge_set(w843));
  CHECK(v843.is_facet);
  CHECK(v843.affine_rank == 20);
  CHECK(v843.ambient_dim == 21);
  CHECK(v843.tight_count == 21);
}

TEST_CASE("wheel and web inequalities stay facets inside complete ambients") {
  WheelSpec w632(6, 3, 2);
  FacetVerdict lifted = is_facet(wheel_inequality(w632), 3,
                                 EdgeSet::complete(6, 2));
  CHECK(lifted.is_facet);
  CHECK(lifted.affine_rank == 14);
  CHECK(lifted.tight_count == 25);

  WebSpec b732(7, 3, 2);
  FacetVerdict web_lifted = is_facet(web_inequality(b732), 3,
                                     EdgeSet::complete(7, 2));
  CHECK(web_lifted.is_facet);
  CHECK(web_lifted.affine_rank == 20);
  CHECK(web_lifted.tight_count == 35);
}

TEST_CASE("rank form of the lifting condition") {
  EdgeSet w6 = wheel_edge_set(WheelSpec(6, 3, 2));
  CHECK(check_lift_rank_form(w6, EdgeSet::complete(6, 2), 3));
  CHECK(check_lift_rank_form(EdgeSet::complete(5, 2),
                             EdgeSet::complete(5, 2), 3));  // H == G

  EdgeSet k5_in_k6 = clique_inequality(range_vertices(5), 3, 2).support(6);
  CHECK(check_lift_rank_form(k5_in_k6, EdgeSet::complete(6, 2), 3));
}

TEST_CASE("general form of the lifting condition") {
  CHECK(check_lift_general_form(doubling_inequality(6, 3, 1),
                                EdgeSet::complete(7, 2), 3));
  LinearInequality w = wheel_inequality(WheelSpec(6, 3, 2));
  CHECK(check_lift_general_form(w, EdgeSet::complete(6, 2), 3));

  // raising the right-hand side empties the tight set, so lifting fails
  LinearInequality raised = w;
  raised.rhs += 1;
  CHECK(!check_lift_general_form(raised, EdgeSet::complete(6, 2), 3));
}

TEST_CASE("lifting agrees with direct rank verification") {
  LinearInequality k5 = clique_inequality(range_vertices(5), 3, 2);
  for (int m : {6, 7}) {
    EdgeSet ambient = EdgeSet::complete(m, 2);
    CHECK(check_lift_general_form(k5, ambient, 3));
    FacetVerdict direct = is_facet(k5, 3, ambient);
    CHECK(direct.is_facet);
    CHECK(direct.affine_rank ==
          static_cast<int>(binomial(m, 2)) - 1);
  }
  LinearInequality d6 = doubling_inequality(6, 3, 1);
  EdgeSet k7 = EdgeSet::complete(7, 2);
  CHECK(check_lift_general_form(d6, k7, 3));
  CHECK(is_facet(d6, 3, k7).is_facet);
}

TEST_CASE("dropping a tight point never raises the affine rank") {
  WheelSpec spec(6, 3, 2);
  TightPoints tight =
      tight_points(wheel_inequality(spec), 3, wheel_edge_set(spec));
  int full_rank = affine_rank(tight.points);
  for (std::size_t skip = 0; skip < tight.points.size(); ++skip) {
    std::vector<EdgeSet> reduced;
    for (std::size_t i = 0; i < tight.points.size(); ++i)
      if (i != skip) reduced.push_back(tight.points[i]);
    CHECK(affine_rank(reduced) <= full_rank);
  }
}

TEST_CASE("truncated enumerations disable facet claims") {
  turan_test::OptimaCapGuard guard(4);
  FacetVerdict verdict = is_facet(clique_inequality(range_vertices(5), 3, 2),
                                  3, EdgeSet::complete(5, 2));
  CHECK(verdict.truncated);
  CHECK(!verdict.is_facet);

  CHECK_THROWS_AS(check_lift_general_form(clique_inequality(range_vertices(5),
                                                            3, 2),
                                          EdgeSet::complete(6, 2), 3),
                  CapExceeded);
}

TEST_CASE("extension enumeration refuses oversized ambients") {
  LinearInequality k5 = clique_inequality(range_vertices(5), 3, 2);
  CHECK_THROWS_AS(is_facet(k5, 3, EdgeSet::complete(9, 2)), CapExceeded);
  // the boundary ambient (28 edges) is still allowed
  CHECK_NOTHROW(tight_points(clique_inequality(range_vertices(7), 3, 2), 3,
                             EdgeSet::complete(8, 2)));
}

TEST_CASE("ambient must contain the support") {
  LinearInequality k5 = clique_inequality(range_vertices(5), 3, 2);
  CHECK_THROWS_AS(is_facet(k5, 3, EdgeSet::complete(4, 2)),
                  std::invalid_argument);
}
