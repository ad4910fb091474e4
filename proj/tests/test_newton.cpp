#include "qindex/newton.hpp"

#include "doctest.h"

#include <random>

using namespace qindex;

namespace {

std::vector<PolygonPoint> random_points(std::mt19937_64& g) {
  const int n = 1 + static_cast<int>(g() % 8);
  std::vector<PolygonPoint> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back({static_cast<long>(g() % 12), static_cast<long>(g() % 30)});
  return pts;
}

}  // namespace

TEST_CASE("lower_hull equals the gift-wrapping oracle on 10^4 random point sets") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::vector<PolygonPoint> pts = random_points(rng);
    const auto fast = lower_hull(pts);
    const auto slow = hull_oracle(pts);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
}

TEST_CASE("single side from (0,2) to (2,0)") {
  // Ordinates nu(a_0) = 2, nu(a_1) >= 1 on the side, nu(a_2) = 0.
  const NewtonPolygon np =
      build_polygon({Valuation::finite(2), Valuation::finite(1), Valuation::finite(0)});
  REQUIRE(np.principal.size() == 1);
  const Side& s = np.principal[0];
  CHECK(s.from == PolygonPoint{0, 2});
  CHECK(s.to == PolygonPoint{2, 0});
  CHECK(s.length() == 2);
  CHECK(s.drop() == 2);
  CHECK(s.d() == 2);
  CHECK(s.e() == 1);
  CHECK(s.slope() == std::pair<long, long>{-1, 1});
  CHECK(s.contains(1, 1));
  CHECK(lattice_index(np) == 1);
}

TEST_CASE("three sides through (0,4), (1,2), (2,1), (4,0)") {
  const NewtonPolygon np = build_polygon({Valuation::finite(4), Valuation::finite(2),
                                          Valuation::finite(1), Valuation::finite(2),
                                          Valuation::finite(0)});
  REQUIRE(np.principal.size() == 3);
  CHECK(np.principal[0].from == PolygonPoint{0, 4});
  CHECK(np.principal[0].to == PolygonPoint{1, 2});
  CHECK(np.principal[1].to == PolygonPoint{2, 1});
  CHECK(np.principal[2].to == PolygonPoint{4, 0});
  CHECK(np.principal[0].slope() == std::pair<long, long>{-2, 1});
  CHECK(np.principal[1].slope() == std::pair<long, long>{-1, 1});
  CHECK(np.principal[2].slope() == std::pair<long, long>{-1, 2});
  CHECK(lattice_index(np) == 3);
}

TEST_CASE("two degree-2 sides through (0,6), (2,2), (4,0)") {
  const NewtonPolygon np = build_polygon({Valuation::finite(6), Valuation::finite(5),
                                          Valuation::finite(2), Valuation::finite(1),
                                          Valuation::finite(0)});
  REQUIRE(np.principal.size() == 2);
  const Side& s1 = np.principal[0];
  const Side& s2 = np.principal[1];
  CHECK(s1.from == PolygonPoint{0, 6});
  CHECK(s1.to == PolygonPoint{2, 2});
  CHECK(s2.to == PolygonPoint{4, 0});
  CHECK(s1.d() == 2);
  CHECK(s1.e() == 1);
  CHECK(s2.d() == 2);
  CHECK(s2.e() == 1);
  CHECK(lattice_index(np) == 7);
}

TEST_CASE("one side from (0, m) to (4, 0) counts 3(m-1)/2 lattice points for odd m") {
  for (long m : {3L, 5L, 7L, 9L, 11L}) {
    std::vector<Valuation> ords = {Valuation::finite(m), Valuation::infinity(),
                                   Valuation::infinity(), Valuation::infinity(),
                                   Valuation::finite(0)};
    const NewtonPolygon np = build_polygon(ords);
    REQUIRE(np.principal.size() == 1);
    CHECK(np.principal[0].from == PolygonPoint{0, m});
    CHECK(np.principal[0].to == PolygonPoint{4, 0});
    CHECK(lattice_index(np) == 3 * (m - 1) / 2);
  }
}

TEST_CASE("infinite ordinates are skipped; all-infinite input is rejected") {
  const NewtonPolygon np = build_polygon(
      {Valuation::finite(3), Valuation::infinity(), Valuation::finite(0)});
  REQUIRE(np.principal.size() == 1);
  CHECK(np.principal[0].from == PolygonPoint{0, 3});
  CHECK(np.principal[0].to == PolygonPoint{2, 0});

  CHECK_THROWS_AS(build_polygon({Valuation::infinity(), Valuation::infinity()}),
                  std::domain_error);
}

TEST_CASE("principal part stops at the leftmost minimal-ordinate vertex") {
  // Ordinates 2, 0, 0: the polygon continues flat after x = 1, but the
  // principal part is only the negative-slope side (0,2)-(1,0).
  const NewtonPolygon np =
      build_polygon({Valuation::finite(2), Valuation::finite(0), Valuation::finite(0)});
  REQUIRE(np.principal.size() == 1);
  CHECK(np.principal[0].to == PolygonPoint{1, 0});
  CHECK(np.principal_end_x == 1);
  CHECK(np.min_ordinate == 0);
}

TEST_CASE("phi_polygon of x^4 + 8 at phi = x") {
  const IntPoly F{BigInt(8), BigInt(0), BigInt(0), BigInt(0), BigInt(1)};
  const NewtonPolygon np = phi_polygon(F, IntPoly::x_power(1), BigInt(2));
  REQUIRE(np.principal.size() == 1);
  CHECK(np.principal[0].from == PolygonPoint{0, 3});
  CHECK(np.principal[0].to == PolygonPoint{4, 0});
  CHECK(np.principal[0].d() == 1);
  CHECK(np.principal[0].e() == 4);
  CHECK(lattice_index(np) == 3);
}

TEST_CASE("Side integral_at and floor_value_at") {
  const Side s{{0, 3}, {4, 0}};  // slope -3/4
  CHECK(s.floor_value_at(1) == 2);  // 9/4
  CHECK(s.floor_value_at(2) == 1);  // 3/2
  CHECK(s.floor_value_at(3) == 0);  // 3/4
  CHECK(s.integral_at(0));
  CHECK(s.integral_at(4));
  CHECK_FALSE(s.integral_at(1));
  CHECK_FALSE(s.integral_at(2));

  const Side t{{0, 4}, {2, 0}};  // slope -2
  CHECK(t.integral_at(1));
  CHECK(t.contains(1, 2));
  CHECK_FALSE(t.contains(1, 1));
}
