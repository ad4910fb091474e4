// Tests for the residue-class case tables and the matchers built on them:
// transcription invariants of the stored lists, parameter extraction, the
// expected-outcome table, and the documented ambiguities (tau variants and
// the cubic case-(3) list modulus).

#include "doctest.h"

#include "qindex/quartic_index.hpp"
#include "qindex/theorem_tables.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace qindex;

namespace {

bool has_case(const std::vector<TheoremMatch>& ms, int c) {
  return std::any_of(ms.begin(), ms.end(),
                     [&](const TheoremMatch& m) { return m.case_number == c; });
}

const TheoremMatch& get_case(const std::vector<TheoremMatch>& ms, int c) {
  for (const auto& m : ms)
    if (m.case_number == c) return m;
  throw std::logic_error("case not matched");
}

}  // namespace

TEST_CASE("case_count reports 17 dyadic and 4 cubic cases") {
  CHECK(case_count(1) == 17);
  CHECK(case_count(2) == 4);
  CHECK_THROWS_AS(case_count(0), std::out_of_range);
  CHECK_THROWS_AS(case_count(3), std::out_of_range);
}

TEST_CASE("expected_outcome is consistent with the index table for every case") {
  for (int theorem : {1, 2}) {
    const long p = theorem == 1 ? 2 : 3;
    for (int c = 1; c <= case_count(theorem); ++c) {
      CAPTURE(theorem);
      CAPTURE(c);
      CaseOutcome out = expected_outcome(theorem, c);
      CHECK(out.p == p);
      // The predicted valuation must agree with the index table applied to
      // the predicted decomposition type.
      CHECK(out.nu == engstrom_nu(out.shape, p));
    }
  }
  CHECK_THROWS_AS(expected_outcome(1, 0), std::out_of_range);
  CHECK_THROWS_AS(expected_outcome(1, 18), std::out_of_range);
  CHECK_THROWS_AS(expected_outcome(2, 5), std::out_of_range);
  CHECK_THROWS_AS(expected_outcome(3, 1), std::out_of_range);
}

TEST_CASE("expected_outcome spot values") {
  CHECK(expected_outcome(1, 1).shape.to_string() == "[2^1, 2^1]");
  CHECK(expected_outcome(1, 1).nu == 1);
  CHECK(expected_outcome(1, 3).shape.to_string() == "[1^1, 1^1, 1^2]");
  CHECK(expected_outcome(1, 3).nu == 1);
  CHECK(expected_outcome(1, 6).shape.to_string() == "[1^1, 1^1, 1^1, 1^1]");
  CHECK(expected_outcome(1, 6).nu == 2);
  CHECK(expected_outcome(1, 17).nu == 2);
  for (int c = 1; c <= 4; ++c) {
    CHECK(expected_outcome(2, c).shape.to_string() == "[1^1, 1^1, 1^1, 1^1]");
    CHECK(expected_outcome(2, c).nu == 1);
  }
}

TEST_CASE("dyadic case (1): 8 classes mod 8, all inside the congruence envelope") {
  const TripleClassList& list = theorem1_triples(1);
  CHECK(list.modulus == 8);
  CHECK(list.triples.size() == 8);
  std::set<std::array<long, 3>> seen;
  for (const auto& t : list.triples) {
    CAPTURE(t[0]);
    CAPTURE(t[1]);
    CAPTURE(t[2]);
    for (long x : t) {
      CHECK(x >= 0);
      CHECK(x < 8);
    }
    // Every listed class satisfies F(1) == 4 (mod 8) and F'(1) == 2 (mod 4).
    CHECK((1 + t[0] + t[1] + t[2]) % 8 == 4);
    CHECK((4 + 3 * t[0] + t[1]) % 4 == 2);
    seen.insert(t);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("dyadic case (2): 63 distinct classes mod 32 with one absent class") {
  const TripleClassList& list = theorem1_triples(2);
  CHECK(list.modulus == 32);
  CHECK(list.triples.size() == 63);
  std::set<std::array<long, 3>> seen;
  for (const auto& t : list.triples) {
    CAPTURE(t[0]);
    CAPTURE(t[1]);
    CAPTURE(t[2]);
    for (long x : t) {
      CHECK(x >= 0);
      CHECK(x < 32);
    }
    CHECK((1 + t[0] + t[1] + t[2]) % 32 == 16);
    CHECK((4 + 3 * t[0] + t[1]) % 8 == 4);
    // Class structure: a odd, b == 5a (mod 8), c == 15 - a - b (mod 32).
    CHECK(t[0] % 2 == 1);
    CHECK((t[1] - 5 * t[0]) % 8 == 0);
    CHECK(((t[2] - (15 - t[0] - t[1])) % 32 + 32) % 32 == 0);
    seen.insert(t);
  }
  CHECK(seen.size() == 63);
  // The structure has 4 * 16 = 64 members; exactly one is absent, and it is
  // (19, 31, 29). The family verifier's completeness probe rediscovers it.
  CHECK(seen.count({19, 31, 29}) == 0);
  CHECK(!list.comment.empty());
}

TEST_CASE("dyadic case (3): 8 classes mod 16, a and b even, c odd") {
  const TripleClassList& list = theorem1_triples(3);
  CHECK(list.modulus == 16);
  CHECK(list.triples.size() == 8);
  std::set<std::array<long, 3>> seen;
  for (const auto& t : list.triples) {
    CHECK(t[0] % 2 == 0);
    CHECK(t[1] % 2 == 0);
    CHECK(t[2] % 2 == 1);
    seen.insert(t);
  }
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(theorem1_triples(4), std::out_of_range);
  CHECK_THROWS_AS(theorem1_triples(0), std::out_of_range);
}

TEST_CASE("dyadic pair lists: moduli and the linking congruence for c") {
  const PairClassList& c4 = theorem1_pairs(4);
  CHECK(c4.modulus == 16);
  CHECK(c4.pairs.size() == 4);
  CHECK(c4.c_sign == -1);
  CHECK(c4.c_add == -1);
  CHECK(c4.c_modulus == 64);
  for (const auto& pr : c4.pairs) {
    // b - a == 4 (mod 16) throughout the case-(4) list.
    CHECK(((pr[1] - pr[0]) % 16 + 16) % 16 == 4);
    CHECK(pr[0] % 4 == 0);
    CHECK(pr[1] % 4 == 0);
  }

  const PairClassList& c5 = theorem1_pairs(5);
  CHECK(c5.modulus == 32);
  CHECK(c5.pairs.size() == 4);
  CHECK(c5.c_sign == -1);
  CHECK(c5.c_add == 63);
  CHECK(c5.c_modulus == 128);
  for (const auto& pr : c5.pairs) {
    CHECK(pr[0] % 4 == 2);
    CHECK(pr[1] % 4 == 2);
  }

  const PairClassList& c6 = theorem1_pairs(6);
  CHECK(c6.modulus == 128);
  CHECK(c6.pairs.size() == 8);
  CHECK(c6.c_modulus == 1024);
  for (const auto& pr : c6.pairs) {
    CHECK(pr[0] % 16 == 6);
    CHECK(pr[1] % 16 == 10);
  }
  CHECK_THROWS_AS(theorem1_pairs(3), std::out_of_range);
  CHECK_THROWS_AS(theorem1_pairs(7), std::out_of_range);
}

TEST_CASE("cubic pair lists: 9 classes each and the linking congruences") {
  const PairClassList& c2 = theorem2_pairs(2);
  CHECK(c2.modulus == 27);
  CHECK(c2.pairs.size() == 9);
  CHECK(c2.c_sign == 1);
  CHECK(c2.c_add == 1);
  CHECK(c2.c_modulus == 243);
  for (const auto& pr : c2.pairs) CHECK(pr[0] % 3 == 0);

  const PairClassList& c3a = theorem2_pairs(3, 27);
  const PairClassList& c3b = theorem2_pairs(3, 243);
  CHECK(c3a.modulus == 27);
  CHECK(c3b.modulus == 243);
  CHECK(c3a.pairs == c3b.pairs);  // same printed entries, two readings
  CHECK(c3a.pairs.size() == 9);
  CHECK(c3a.c_sign == -1);
  CHECK(c3a.c_modulus == 243);
  for (const auto& pr : c3a.pairs) {
    CHECK(pr[0] < 27);  // why two readings exist: every entry fits mod 27
    CHECK(pr[1] < 27);
  }
  CHECK_THROWS_AS(theorem2_pairs(3, 81), std::out_of_range);

  const PairClassList& c4 = theorem2_pairs(4);
  CHECK(c4.modulus == 27);
  CHECK(c4.pairs.size() == 9);
  CHECK(c4.c_sign == 1);
  CHECK(c4.c_add == 1);
  CHECK(c4.c_modulus == 81);
  for (const auto& pr : c4.pairs) CHECK(pr[0] % 3 == 2);

  CHECK_THROWS_AS(theorem2_pairs(1), std::out_of_range);
  CHECK_THROWS_AS(theorem2_pairs(5), std::out_of_range);
}

TEST_CASE("residue_mod normalizes into [0, m)") {
  CHECK(residue_mod(BigInt(-1), 64) == 63);
  CHECK(residue_mod(BigInt(0), 5) == 0);
  CHECK(residue_mod(BigInt(129), 64) == 1);
  CHECK(residue_mod(BigInt(-65), 64) == 63);
  CHECK(residue_mod(BigInt("-123456789123456789"), 7) ==
        residue_mod(BigInt("-123456789123456789") + BigInt(7) * 100000000000000000LL, 7));
  CHECK_THROWS_AS(residue_mod(BigInt(1), 0), std::domain_error);
}

TEST_CASE("match_theorem1 on the reference inputs") {
  // x^4 + 4913 x^3 + 867 x + 119: class (1, 3, 7) mod 8 of case (1).
  auto ms = match_theorem1(BigInt(4913), BigInt(867), BigInt(119));
  REQUIRE(has_case(ms, 1));
  const TheoremMatch& m1 = get_case(ms, 1);
  CHECK(m1.theorem == 1);
  CHECK(m1.p == 2);
  CHECK(m1.nu_p == 1);
  CHECK(m1.expected_shape.to_string() == "[2^1, 2^1]");
  CHECK(m1.to_string() == "theorem 1 case (1), p=2, nu_p=1");

  // x^4 + 6 x^3 + 42 x + 975 lies in both totally-split cases (6) and (8).
  auto ms2 = match_theorem1(BigInt(6), BigInt(42), BigInt(975));
  CHECK(has_case(ms2, 6));
  CHECK(has_case(ms2, 8));
  for (const auto& m : ms2) CHECK(m.nu_p == 2);

  // x^4 + 21156911906816 x^3 + 448 x + 287: case (3) (a, b even, c odd).
  auto ms3 = match_theorem1(BigInt("21156911906816"), BigInt(448), BigInt(287));
  REQUIRE(has_case(ms3, 3));
  CHECK(get_case(ms3, 3).nu_p == 1);
}

TEST_CASE("match_theorem2 on the reference inputs") {
  // x^4 + 25 x^3 + 1125 x + 405 is a case-(1) member.
  auto ms = match_theorem2(BigInt(25), BigInt(1125), BigInt(405));
  REQUIRE(has_case(ms, 1));
  const TheoremMatch& m = get_case(ms, 1);
  CHECK(m.theorem == 2);
  CHECK(m.p == 3);
  CHECK(m.nu_p == 1);
  CHECK(m.expected_shape.to_string() == "[1^1, 1^1, 1^1, 1^1]");

  // x^4 + 21156911906816 x^3 + 448 x + 287 is a case-(4) member.
  auto ms2 = match_theorem2(BigInt("21156911906816"), BigInt(448), BigInt(287));
  CHECK(has_case(ms2, 4));

  // Case-(1) members must satisfy v_3(b) >= 2 and v_3(c) >= 4; a unit c
  // cannot match anything.
  auto none = match_theorem2(BigInt(1), BigInt(1), BigInt(1));
  CHECK(none.empty());
}

TEST_CASE("cases (11) and (17) overlap at v_2(c) = 4") {
  auto ms = match_theorem1(BigInt(1), BigInt(4), BigInt(112));
  REQUIRE(has_case(ms, 11));
  REQUIRE(has_case(ms, 17));
  CHECK(get_case(ms, 11).nu_p == 1);
  CHECK(get_case(ms, 17).nu_p == 2);
  // Matches come back in ascending case order.
  CHECK(std::is_sorted(ms.begin(), ms.end(), [](const TheoremMatch& x, const TheoremMatch& y) {
    return x.case_number < y.case_number;
  }));
  // Extracted parameters of the case-(17) match.
  const CaseParameters& ps = get_case(ms, 17).params;
  REQUIRE(ps.tau.has_value());
  REQUIRE(ps.sigma.has_value());
  CHECK(*ps.tau == 4);
  CHECK(*ps.sigma == 0);
  REQUIRE(ps.l.has_value());
  CHECK(*ps.l == 2);
}

TEST_CASE("dyadic_tau_sigma guards its domain") {
  CHECK_THROWS_AS(dyadic_tau_sigma(BigInt(2), BigInt(4), BigInt(16), TauVariant::Statement),
                  std::domain_error);  // a even
  CHECK_THROWS_AS(dyadic_tau_sigma(BigInt(1), BigInt(8), BigInt(16), TauVariant::Statement),
                  std::domain_error);  // v2(b) != 2
  CHECK_THROWS_AS(dyadic_tau_sigma(BigInt(1), BigInt(4), BigInt(4), TauVariant::Statement),
                  std::domain_error);  // v2(c) < 3
  CHECK_THROWS_AS(dyadic_tau_sigma(BigInt(1), BigInt(4), BigInt(0), TauVariant::Statement),
                  std::domain_error);  // c = 0

  TauSigma ts = dyadic_tau_sigma(BigInt(1), BigInt(4), BigInt(112), TauVariant::Statement);
  CHECK(ts.tau == 4);
  CHECK(ts.sigma == 0);
  CHECK(ts.sigma_integral);
}

TEST_CASE("the two tau variants disagree on a case-(17) witness") {
  // (a, b, c) = (335, 12, 2^14): with the statement's tau (= 9) case (17)
  // fires; with the proof's tau (= 1) neither (16) nor (17) fires, although
  // the engine still finds the case-(17) outcome. The family verifier
  // reports this same split on the b2 = 3 cells.
  BigInt a = 335, b = 12, c = BigInt(1) << 14;

  TauSigma st = dyadic_tau_sigma(a, b, c, TauVariant::Statement);
  TauSigma pv = dyadic_tau_sigma(a, b, c, TauVariant::ProofVariant);
  CHECK(st.tau == 9);
  CHECK(pv.tau == 1);
  CHECK(st.sigma == pv.sigma);  // sigma does not depend on the variant
  CHECK(st.sigma == 2);

  MatchOptions stmt;
  stmt.tau_variant = TauVariant::Statement;
  MatchOptions proof;
  proof.tau_variant = TauVariant::ProofVariant;

  auto ms_stmt = match_theorem1(a, b, c, stmt);
  auto ms_proof = match_theorem1(a, b, c, proof);
  CHECK(has_case(ms_stmt, 17));
  CHECK(!has_case(ms_stmt, 16));
  CHECK(!has_case(ms_proof, 16));
  CHECK(!has_case(ms_proof, 17));
}

TEST_CASE("cubic case (3): the two list readings differ off the mod-243 grid") {
  // A lift of a listed pair by +27 in a: still a listed class mod 27, no
  // longer listed mod 243. The matcher honors the requested reading.
  BigInt a = 45, b = 23, c = 174;  // a + b == -(1 + c) (mod 243) holds
  CHECK(residue_mod(a + b + 1 + c, 243) == 0);

  MatchOptions m27;  // default reading
  MatchOptions m243;
  m243.theorem2_case3_list_modulus = 243;

  CHECK(has_case(match_theorem2(a, b, c, m27), 3));
  CHECK(!has_case(match_theorem2(a, b, c, m243), 3));

  // On the grid itself both readings agree.  The minimal lift of a listed
  // pair lands on omega = 5, tau = 3 (2 tau == omega + 1, which the case
  // rejects), so bump c by 2 * 243 to push omega to 6 while keeping the
  // class: (3, 14, 711) has omega = v3(729) = 6, tau = v3(27) = 3, and
  // 2 tau < omega + 1 holds.
  BigInt a0 = 3, b0 = 14, c0 = 711;
  CHECK(residue_mod(a0 + b0 + 1 + c0, 243) == 0);
  auto on27 = match_theorem2(a0, b0, c0, m27);
  auto on243 = match_theorem2(a0, b0, c0, m243);
  CHECK(has_case(on27, 3));
  CHECK(has_case(on243, 3));
  for (const auto& m : on243) {
    if (m.case_number != 3) continue;
    REQUIRE(m.params.omega.has_value());
    REQUIRE(m.params.tau.has_value());
    CHECK(*m.params.omega == 6);
    CHECK(*m.params.tau == 3);
  }
}

TEST_CASE("CaseParameters and TheoremMatch render compactly") {
  auto ms = match_theorem1(BigInt(4913), BigInt(867), BigInt(119));
  REQUIRE(!ms.empty());
  CHECK(ms[0].to_string().find("theorem 1") == 0);
  auto ms2 = match_theorem2(BigInt(25), BigInt(1125), BigInt(405));
  REQUIRE(!ms2.empty());
  CHECK(ms2[0].to_string() == "theorem 2 case (1), p=3, nu_p=1");
}
