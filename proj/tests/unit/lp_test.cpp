#include <doctest.h>

#include <sstream>

#include "turan/extremal.hpp"
#include "turan/lp.hpp"
#include "test_util.hpp"

using namespace turan;

namespace {

std::vector<Rational> ones(const ConstraintSystem& system) {
  return std::vector<Rational>(system.variable_count(), Rational(1));
}

}  // namespace

TEST_CASE("relaxation rows for small systems") {
  ConstraintSystem q432 = build_Q(4, 3, 2);
  CHECK(q432.variable_count() == 6);
  CHECK(q432.rows.size() == 4);
  for (const auto& row : q432.rows) CHECK(row.rhs == 2);

  ConstraintSystem q532 = build_Q(5, 3, 2);
  CHECK(q532.rows.size() == 15);
  int rhs2 = 0, rhs4 = 0;
  for (const auto& row : q532.rows) {
    if (row.rhs == 2) ++rhs2;
    if (row.rhs == 4) ++rhs4;
  }
  CHECK(rhs2 == 10);
  CHECK(rhs4 == 5);

  ConstraintSystem q542 = build_Q(5, 4, 2);
  CHECK(q542.rows.size() == 5);
  for (const auto& row : q542.rows) CHECK(row.rhs == 5);

  ConstraintSystem with_top = build_Q(4, 3, 2, /*include_full_clique=*/true);
  CHECK(with_top.rows.size() == 5);
}

TEST_CASE("row cap") {
  // sum of C(20,i) for i in 3..19 is astronomically past the cap
  CHECK_THROWS_AS(build_Q(20, 3, 2), CapExceeded);
}

TEST_CASE("single-variable program") {
  ConstraintSystem tiny;
  tiny.n = 2;
  tiny.r = 2;
  tiny.a = 3;
  std::vector<Rational> objective{Rational(1)};
  LpResult lp = lp_max(tiny, objective);
  CHECK(lp.value == Rational(1));
  CHECK(lp.point[0] == Rational(1));
}

TEST_CASE("all-ones optima over small relaxations") {
  LpResult q432 = lp_max(build_Q(4, 3, 2), ones(build_Q(4, 3, 2)));
  CHECK(q432.value == Rational(4));

  LpResult q532 = lp_max(build_Q(5, 3, 2), ones(build_Q(5, 3, 2)));
  CHECK(q532.value == Rational(20, 3));
  CHECK(floor_rational(q532.value) == 6);
}

TEST_CASE("optimal points satisfy every row exactly") {
  for (auto [n, a] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 4}}) {
    ConstraintSystem system = build_Q(n, a, 2);
    LpResult lp = lp_max(system, ones(system));
    for (const auto& row : system.rows) {
      Rational lhs = 0;
      for (const auto& [rank, c] : row.coeffs) lhs += Rational(c) * lp.point[rank];
      CHECK(lhs <= Rational(row.rhs));
    }
    for (const Rational& x : lp.point) {
      CHECK(x >= 0);
      CHECK(x <= 1);
    }
  }
}

TEST_CASE("relaxation value floors to the exact extremal number") {
  for (auto [n, a] : std::vector<std::pair<int, int>>{
           {4, 3}, {5, 3}, {6, 3}, {7, 3}, {5, 4}, {6, 4}, {7, 4}}) {
    ConstraintSystem system = build_Q(n, a, 2);
    LpResult lp = lp_max(system, ones(system));
    CHECK(Rational(ex_exact(n, a)) <= lp.value);            // relaxation bound
    CHECK(lp.value - Rational(ex_exact(n, a)) < Rational(1));
    CHECK(integrality_gap_check(n, a));
  }
}

TEST_CASE("pivot counts are reproducible") {
  ConstraintSystem system = build_Q(5, 3, 2);
  LpResult first = lp_max(system, ones(system));
  LpResult second = lp_max(system, ones(system));
  CHECK(first.pivots == second.pivots);
  CHECK(first.pivots > 0);

  // regression pins for the lowest-index pivoting rule
  CHECK(lp_max(build_Q(4, 3, 2), ones(build_Q(4, 3, 2))).pivots == 6);
  CHECK(first.pivots == 12);
  CHECK(lp_max(build_Q(5, 4, 2), ones(build_Q(5, 4, 2))).pivots == 14);
}

TEST_CASE("LP text export") {
  ConstraintSystem system = build_Q(4, 3, 2);
  std::ostringstream out;
  write_lp_format(system, ones(system), out);
  std::string text = out.str();
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("x_1_2") != std::string::npos);
  CHECK(text.find("<= 2") != std::string::npos);
  CHECK(text.find("0 <= x_1_2 <= 1") != std::string::npos);
  CHECK(text.rfind("End\n") == text.size() - 4);
}
