#include "qindex/ore.hpp"

#include "qindex/theorem_tables.hpp"

#include "doctest.h"

#include <random>

using namespace qindex;

namespace {

IntPoly quartic(long a, long b, long c) {
  return Quadrinomial{BigInt(a), BigInt(b), BigInt(c)}.to_poly();
}

/// The residue-field element list [k0, k1, ...] as a ResidueField::Poly over
/// a prime field (each coefficient a constant).
ResidueField::Poly const_poly(const ResidueField& K, std::initializer_list<long> ks) {
  std::vector<ResidueField::Elem> cs;
  for (long k : ks) cs.push_back(K.from_int(k));
  return K.poly_from(std::move(cs));
}

}  // namespace

TEST_CASE("splitting shapes canonicalize and render") {
  SplittingShape s;
  s.add(2, 1);
  s.add(1, 2);
  s.add(1, 1);
  s.sort_canonical();
  CHECK(s.to_string() == "[1^1, 1^2, 2^1]");
  CHECK(s.sum_ef() == 5);
  CHECK(SplittingShape::of({{1, 2}, {1, 2}}).to_string() == "[2^1, 2^1]");
  CHECK(SplittingShape::of({{2, 1}, {2, 1}}).to_string() == "[1^2, 1^2]");
}

TEST_CASE("first dyadic list: single side (0,2)-(2,0) with residual 1 + y + y^2 over F_2") {
  std::mt19937_64 rng(5);
  const TripleClassList& list = theorem1_triples(1);
  const ResidueField K(GFPoly(2, {0, 1}));
  for (const auto& t : list.triples) {
    for (int trial = 0; trial < 4; ++trial) {
      const long d1 = static_cast<long>(rng() % 64) * list.modulus;
      const long d2 = static_cast<long>(rng() % 64) * list.modulus;
      const long d3 = static_cast<long>(rng() % 64) * list.modulus;
      const IntPoly F = quartic(t[0] + d1, t[1] + d2, t[2] + d3);
      const OreResult res = ore_split(F, 2);
      REQUIRE(res.regular);
      CHECK(res.shape.to_string() == "[2^1, 2^1]");
      // The repeated factor's polygon: one side, residual y^2 + y + 1.
      bool found = false;
      for (const PhiAnalysis& pa : res.phis) {
        if (!pa.has_polygon) continue;
        REQUIRE(pa.sides.size() == 1);
        const SideAnalysis& sa = pa.sides[0];
        CHECK(sa.side.from == PolygonPoint{0, 2});
        CHECK(sa.side.to == PolygonPoint{2, 0});
        CHECK(sa.residual == const_poly(K, {1, 1, 1}));
        CHECK(sa.separable);
        found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("trinomial residual at p = 3 factors as a(y-1)(y+1) on 100 lifts") {
  // Instances with 3 | b, 3 | c, v_3(b) = 2, 3 v_3(b) < 2 v_3(c), and the
  // unit of b congruent to -a mod 3: the polygon side of slope -1 has
  // residual a y^2 + b_3 = a (y - 1)(y + 1) over F_3.
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 100) {
    const long a = 1 + 3 * static_cast<long>(rng() % 100) +
                   ((rng() & 1) ? 1 : 0);  // a in {1, 2} mod 3
    const long e = 1 + static_cast<long>(rng() % 50);
    const long b3 = -a + 3 * e;
    const long b = 9 * b3;
    const long c3 = 1 + static_cast<long>(rng() % 3 == 0 ? 1 : 0) + 3 * static_cast<long>(rng() % 50);
    const long c = 81 * (3 * c3 + 1);
    const IntPoly F = quartic(a, b, c);
    if (F.eval(BigInt(1)) == 0 || F.eval(BigInt(-1)) == 0) continue;
    const OreResult res = ore_split(F, 3);
    REQUIRE(res.regular);
    bool found = false;
    for (const PhiAnalysis& pa : res.phis) {
      if (!pa.has_polygon) continue;
      for (const SideAnalysis& sa : pa.sides) {
        if (sa.side.drop() != sa.side.length()) continue;  // want the slope -1 side
        if (sa.side.length() != 2) continue;
        const ResidueField K(GFPoly(3, {0, 1}));
        CHECK(sa.residual == const_poly(K, {((b3 % 3) + 3) % 3, 0, ((a % 3) + 3) % 3}));
        CHECK(sa.separable);
        REQUIRE(sa.residual_factors.size() == 2);  // splits into two distinct linear factors
        CHECK(sa.residual_factors[0].second == 1);
        CHECK(sa.residual_factors[1].second == 1);
        found = true;
      }
    }
    CHECK(found);
    ++checked;
  }
}

TEST_CASE("shift regularization fixes the repeated linear factor when needed") {
  // x^4 + 25x^3 + 1125x + 405 is 2-irregular with the default lift of x + 1
  // but regular after shifting the generator.
  const IntPoly F = quartic(25, 1125, 405);
  CHECK_FALSE(is_p_regular(F, 2));
  const ShiftOutcome so = regularize_by_shift(F, 2);
  REQUIRE(so.success);
  CHECK(so.result.regular);
  CHECK(so.result.shape.to_string() == "[1^2, 2^1]");
  CHECK(so.attempts >= 1);
  REQUIRE(so.roots_used.size() == 1);

  // The shape is what the analyzer reports for 2 O_K.
  CHECK(is_p_regular(quartic(25, 1125, 405), 3));
}

TEST_CASE("ore_split throws LiftDividesError when a lift divides F") {
  // (x - 1)^4 reduces to (x + 1)^4 mod 2, and the balanced lift x - 1 of
  // that factor divides F over Z.
  const IntPoly F{BigInt(1), BigInt(-4), BigInt(6), BigInt(-4), BigInt(1)};
  CHECK_THROWS_AS(ore_split(F, 2), LiftDividesError);
  try {
    ore_split(F, 2);
  } catch (const LiftDividesError& e) {
    CHECK(e.lift == IntPoly::linear_root(BigInt(1)));
  }
}

TEST_CASE("reference inputs have the documented shapes at both primes") {
  struct Row {
    long long a, b, c;
    const char* shape2;
    const char* shape3;
  };
  const std::vector<Row> rows = {
      {4913, 867, 119, "[2^1, 2^1]", "[4^1]"},
      {6, 42, 975, "[1^1, 1^1, 1^1, 1^1]", "[1^4]"},
      {21156911906816LL, 448, 287, "[1^1, 1^1, 1^2]", "[1^1, 1^1, 1^1, 1^1]"},
  };
  for (const Row& r : rows) {
    const IntPoly F = Quadrinomial{BigInt(r.a), BigInt(r.b), BigInt(r.c)}.to_poly();
    for (long p : {2L, 3L}) {
      OreResult res = ore_split(F, p);
      if (!res.regular) {
        const ShiftOutcome so = regularize_by_shift(F, p);
        REQUIRE(so.success);
        res = so.result;
      }
      CHECK(res.shape.to_string() == (p == 2 ? r.shape2 : r.shape3));
      // Sum of e*f over the parts is always the degree.
      CHECK(res.shape.sum_ef() == 4);
    }
  }
}

TEST_CASE("dedekind_p_maximal") {
  // x^4 + x + 1 is irreducible mod 2, so Z[alpha] is maximal at 2.
  CHECK(dedekind_p_maximal(quartic(0, 1, 1), 2).maximal);
  // The first reference input has nu_2(i(K)) = 1 > 0, so Z[alpha] cannot be
  // maximal at 2.
  CHECK_FALSE(dedekind_p_maximal(quartic(4913, 867, 119), 2).maximal);
  // x^4 + 8: the index of Z[alpha] at 2 is positive (polygon count 3) even
  // though i(K) = 1 there.
  CHECK_FALSE(dedekind_p_maximal(quartic(0, 0, 8), 2).maximal);
  CHECK(dedekind_p_maximal(quartic(0, 0, 8), 5).maximal);
}

TEST_CASE("regular splits satisfy sum e*f = 4 on random inputs") {
  std::mt19937_64 rng(77);
  int seen = 0;
  while (seen < 200) {
    const long a = static_cast<long>(rng() % 41) - 20;
    const long b = static_cast<long>(rng() % 41) - 20;
    long c = static_cast<long>(rng() % 41) - 20;
    if (c == 0) c = 21;
    const IntPoly F = quartic(a, b, c);
    if (F.eval(BigInt(1)) == 0 || F.eval(BigInt(-1)) == 0) continue;
    for (long p : {2L, 3L}) {
      try {
        OreResult res = ore_split(F, p);
        if (!res.regular) {
          const ShiftOutcome so = regularize_by_shift(F, p);
          if (!so.success) continue;
          res = so.result;
        }
        CHECK(res.shape.sum_ef() == 4);
        CHECK(res.index_valuation >= 0);
      } catch (const LiftDividesError&) {
        // Reducible draw; nothing to check.
      }
    }
    ++seen;
  }
}
