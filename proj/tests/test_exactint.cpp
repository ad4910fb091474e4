#include "qindex/exactint.hpp"

#include "doctest.h"

#include <random>

using namespace qindex;

TEST_CASE("Valuation ordering and accessors") {
  const Valuation two = Valuation::finite(2);
  const Valuation five = Valuation::finite(5);
  const Valuation inf = Valuation::infinity();

  CHECK(two.is_finite());
  CHECK(inf.is_infinite());
  CHECK(two.get() == 2);
  CHECK_THROWS_AS(inf.get(), std::domain_error);
  CHECK_THROWS_AS(Valuation::finite(-1), std::domain_error);

  CHECK(two < five);
  CHECK(five < inf);
  CHECK(inf == Valuation::infinity());
  CHECK(two == 2);
  CHECK(two < 3);
  CHECK(two > 1);
  CHECK(inf > 1000000);
  CHECK(inf.to_string() == "inf");
  CHECK(five.to_string() == "5");
}

TEST_CASE("val_p and unit_part") {
  CHECK(val_p(BigInt(0), BigInt(2)).is_infinite());
  CHECK(val_p(BigInt(12), BigInt(2)) == 2);
  CHECK(val_p(BigInt(-12), BigInt(2)) == 2);
  CHECK(val_p(BigInt(12), BigInt(3)) == 1);
  CHECK(val_p(BigInt(1), BigInt(7)) == 0);
  CHECK(val_p(BigInt(1) << 100, BigInt(2)) == 100);

  CHECK(unit_part(BigInt(-48), BigInt(2)) == -3);
  CHECK(unit_part(BigInt(48), BigInt(2)) == 3);
  CHECK(unit_part(BigInt(7), BigInt(2)) == 7);

  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; ++i) {
    const long p = (i % 2 == 0) ? 2 : 3;
    BigInt m = BigInt(static_cast<long>(rng() % 2000001) - 1000000);
    if (m == 0) m = 17;
    const Valuation v = val_p(m, BigInt(p));
    REQUIRE(v.is_finite());
    BigInt pk = 1;
    for (long j = 0; j < v.get(); ++j) pk *= p;
    CHECK(unit_part(m, BigInt(p)) * pk == m);
    CHECK(unit_part(m, BigInt(p)) % p != 0);
  }
}

TEST_CASE("solve_diophantine_st solves nc*s - 4t = 1 with 0 <= s < 4") {
  for (long nc = 3; nc <= 21; nc += 2) {
    const PowerDecomposition d = solve_diophantine_st(nc);
    CHECK(nc * d.s - 4 * d.t == 1);
    CHECK(d.s >= 0);
    CHECK(d.s < 4);
    CHECK(d.t >= 0);
    // Uniqueness of s in [0, 4): scan.
    int hits = 0;
    for (long s = 0; s < 4; ++s)
      if ((nc * s - 1) % 4 == 0 && (nc * s - 1) / 4 >= 0) ++hits;
    CHECK(hits == 1);
  }
  CHECK(solve_diophantine_st(3).s == 3);
  CHECK(solve_diophantine_st(3).t == 2);
  CHECK(solve_diophantine_st(5).s == 1);
  CHECK(solve_diophantine_st(5).t == 1);
  CHECK(solve_diophantine_st(7).s == 3);
  CHECK(solve_diophantine_st(7).t == 5);
}

TEST_CASE("squarefree_check classifies small integers and respects its bound") {
  const SquarefreeStatus sf30 = squarefree_check(BigInt(30), 1000);
  CHECK(sf30.squarefree());

  const SquarefreeStatus sf45 = squarefree_check(BigInt(45), 1000);
  CHECK(sf45.not_squarefree());
  CHECK(sf45.witness == 3);

  const SquarefreeStatus sf1 = squarefree_check(BigInt(1), 1000);
  CHECK(sf1.squarefree());

  // 1000003 is prime and beyond the bound 1000, so 1000003^2 looks like a
  // unit residue to trial division below the bound.
  const BigInt big = BigInt(1000003) * 1000003;
  const SquarefreeStatus unknown = squarefree_check(big, 1000);
  CHECK(unknown.unknown());
  CHECK(unknown.bound == 1000);

  const SquarefreeStatus sf4big = squarefree_check(4 * big, 1000);
  CHECK(sf4big.not_squarefree());
  CHECK(sf4big.witness == 2);
}

TEST_CASE("primes_up_to enumerates primes") {
  const std::vector<long> ps = primes_up_to(100);
  CHECK(ps.size() == 25);
  CHECK(ps.front() == 2);
  CHECK(ps.back() == 97);
  const std::vector<long> small = primes_up_to(31);
  CHECK(small.size() == 11);
  CHECK(small.back() == 31);
}
