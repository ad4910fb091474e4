#include "qindex/theorem_tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qindex {

namespace {

SplittingShape shape_22() { return SplittingShape::of({{1, 2}, {1, 2}}); }
SplittingShape shape_112() { return SplittingShape::of({{1, 1}, {1, 1}, {2, 1}}); }
SplittingShape shape_1111() { return SplittingShape::of({{1, 1}, {1, 1}, {1, 1}, {1, 1}}); }

}  // namespace

std::string CaseParameters::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const char* name, const std::string& v) {
    if (!first) os << ", ";
    os << name << "=" << v;
    first = false;
  };
  if (mu) put("mu", mu->to_string());
  if (nu) put("nu", nu->to_string());
  if (omega) put("omega", omega->to_string());
  if (tau) put("tau", tau->to_string());
  if (sigma) put("sigma", sigma->to_string());
  if (k) put("k", std::to_string(*k));
  if (l) put("l", std::to_string(*l));
  return os.str();
}

std::string TheoremMatch::to_string() const {
  std::ostringstream os;
  os << "theorem " << theorem;
  if (theorem != 3) os << " case (" << case_number << ")";
  os << ", p=" << p << ", nu_p=" << nu_p;
  std::string ps = params.to_string();
  if (!ps.empty()) os << " [" << ps << "]";
  return os.str();
}

int case_count(int theorem) {
  if (theorem == 1) return 17;
  if (theorem == 2) return 4;
  throw std::out_of_range("case_count: theorem has no case table");
}

CaseOutcome expected_outcome(int theorem, int case_number) {
  if (theorem == 1) {
    switch (case_number) {
      case 1:
      case 2:
      case 5:
        return {2, shape_22(), 1};
      case 3:
      case 4:
      case 7:
      case 9:
      case 10:
      case 11:
      case 13:
      case 14:
      case 16:
        return {2, shape_112(), 1};
      case 6:
      case 8:
      case 12:
      case 15:
      case 17:
        return {2, shape_1111(), 2};
      default:
        break;
    }
  }
  if (theorem == 2 && case_number >= 1 && case_number <= 4) return {3, shape_1111(), 1};
  throw std::out_of_range("expected_outcome: unknown (theorem, case)");
}

const TripleClassList& theorem1_triples(int case_number) {
  static const TripleClassList case1{
      8,
      {{1, 3, 7},
       {1, 7, 3},
       {3, 1, 7},
       {3, 5, 3},
       {5, 3, 3},
       {5, 7, 7},
       {7, 1, 3},
       {7, 5, 7}},
      ""};
  // The source prints 64 triples of which (19, 7, 21) appears twice; the 63
  // distinct classes are stored in print order. The class structure (a odd
  // mod 32, b == 5a mod 8, c == 15-a-b mod 32) has 64 members, so one class,
  // (19, 31, 29), is absent from the printed list; the family verifier's
  // completeness probe rediscovers it.
  static const TripleClassList case2{
      32,
      {{1, 5, 9},    {1, 13, 1},   {1, 21, 25},  {1, 29, 17},  {5, 1, 9},    {5, 9, 1},
       {5, 17, 25},  {5, 25, 17},  {9, 5, 1},    {9, 13, 25},  {9, 21, 17},  {9, 29, 9},
       {13, 1, 1},   {13, 9, 25},  {13, 17, 17}, {13, 25, 9},  {17, 5, 25},  {17, 13, 17},
       {17, 21, 9},  {17, 29, 1},  {21, 1, 25},  {21, 9, 17},  {21, 17, 9},  {21, 25, 1},
       {25, 5, 17},  {25, 13, 9},  {25, 21, 1},  {25, 29, 25}, {29, 1, 17},  {29, 9, 9},
       {29, 17, 1},  {29, 25, 25}, {3, 7, 5},    {3, 15, 29},  {3, 23, 21},  {3, 31, 13},
       {7, 3, 5},    {7, 11, 29},  {7, 19, 21},  {7, 27, 13},  {11, 7, 29},  {11, 15, 21},
       {11, 23, 13}, {11, 31, 5},  {15, 3, 29},  {15, 11, 21}, {15, 19, 13}, {15, 27, 5},
       {19, 7, 21},  {19, 23, 5},  {19, 15, 13}, {23, 3, 21},  {23, 11, 13}, {23, 19, 5},
       {23, 27, 29}, {27, 7, 13},  {27, 15, 5},  {27, 23, 29}, {27, 31, 21}, {31, 3, 13},
       {31, 11, 5},  {31, 19, 29}, {31, 27, 21}},
      "printed list repeats (19, 7, 21) and omits (19, 31, 29)"};
  static const TripleClassList case3{
      16,
      {{0, 0, 15},
       {0, 8, 7},
       {4, 4, 7},
       {4, 12, 15},
       {8, 0, 7},
       {8, 8, 15},
       {12, 4, 15},
       {12, 12, 7}},
      ""};
  switch (case_number) {
    case 1:
      return case1;
    case 2:
      return case2;
    case 3:
      return case3;
    default:
      throw std::out_of_range("theorem1_triples: case has no triple list");
  }
}

const PairClassList& theorem1_pairs(int case_number) {
  // a + b == -(1 + c) (mod 64)
  static const PairClassList case4{16, {{0, 4}, {4, 8}, {8, 12}, {12, 0}}, -1, -1, 64, ""};
  // a + b == -c + 63 (mod 128)
  static const PairClassList case5{32, {{2, 6}, {10, 14}, {18, 22}, {26, 30}}, -1, 63, 128, ""};
  // a + b == -(1 + c) (mod 1024)
  static const PairClassList case6{
      128,
      {{6, 42}, {22, 122}, {38, 74}, {54, 26}, {70, 106}, {86, 58}, {102, 10}, {118, 90}},
      -1,
      -1,
      1024,
      ""};
  switch (case_number) {
    case 4:
      return case4;
    case 5:
      return case5;
    case 6:
      return case6;
    default:
      throw std::out_of_range("theorem1_pairs: case has no pair list");
  }
}

const PairClassList& theorem2_pairs(int case_number, long case3_modulus) {
  // a + b == 1 + c (mod 243)
  static const PairClassList case2{
      27,
      {{0, 4}, {3, 22}, {6, 13}, {9, 4}, {12, 22}, {15, 13}, {18, 4}, {21, 22}, {24, 13}},
      1,
      1,
      243,
      ""};
  // a + b == -(1 + c) (mod 243); the pair list itself is printed "mod 243"
  // although every entry is < 27 -- both readings are provided.
  static const PairClassList case3_27{
      27,
      {{0, 23}, {3, 14}, {6, 5}, {9, 23}, {12, 14}, {15, 5}, {18, 23}, {21, 14}, {24, 5}},
      -1,
      -1,
      243,
      "list printed mod 243 with entries < 27; mod-27 reading"};
  static const PairClassList case3_243{
      243,
      {{0, 23}, {3, 14}, {6, 5}, {9, 23}, {12, 14}, {15, 5}, {18, 23}, {21, 14}, {24, 5}},
      -1,
      -1,
      243,
      "list printed mod 243 with entries < 27; literal reading"};
  // a + b == c + 1 (mod 81)
  static const PairClassList case4{
      27,
      {{2, 16}, {5, 7}, {8, 25}, {11, 16}, {14, 7}, {17, 25}, {20, 16}, {23, 7}, {26, 25}},
      1,
      1,
      81,
      ""};
  switch (case_number) {
    case 2:
      return case2;
    case 3:
      if (case3_modulus == 27) return case3_27;
      if (case3_modulus == 243) return case3_243;
      throw std::out_of_range("theorem2_pairs: case-3 modulus must be 27 or 243");
    case 4:
      return case4;
    default:
      throw std::out_of_range("theorem2_pairs: case has no pair list");
  }
}

long residue_mod(const BigInt& x, long m) {
  if (m < 1) throw std::domain_error("residue_mod: modulus must be >= 1");
  BigInt r = x % m;
  if (r < 0) r += m;
  return r.convert_to<long>();
}

namespace {

bool triple_listed(const TripleClassList& list, const BigInt& a, const BigInt& b,
                   const BigInt& c) {
  std::array<long, 3> t{residue_mod(a, list.modulus), residue_mod(b, list.modulus),
                        residue_mod(c, list.modulus)};
  return std::find(list.triples.begin(), list.triples.end(), t) != list.triples.end();
}

bool pair_listed(const PairClassList& list, const BigInt& a, const BigInt& b, const BigInt& c) {
  std::array<long, 2> t{residue_mod(a, list.modulus), residue_mod(b, list.modulus)};
  if (std::find(list.pairs.begin(), list.pairs.end(), t) == list.pairs.end()) return false;
  // a + b == c_sign * c + c_add (mod c_modulus)
  BigInt lhs = a + b - list.c_sign * c - list.c_add;
  return residue_mod(lhs, list.c_modulus) == 0;
}

/// 2v > bound, with v possibly infinite.
bool twice_gt(const Valuation& v, long bound) { return v.is_infinite() || 2 * v.get() > bound; }
/// 2v < bound (bound finite); infinite v never satisfies this.
bool twice_lt(const Valuation& v, long bound) { return v.is_finite() && 2 * v.get() < bound; }

}  // namespace

TauSigma dyadic_tau_sigma(const BigInt& a, const BigInt& b, const BigInt& c, TauVariant variant) {
  Valuation vb = val_p(b, 2);
  Valuation vc = val_p(c, 2);
  if (residue_mod(a, 2) != 1 || vb != 2 || !vc.is_finite() || vc.get() < 3)
    throw std::domain_error("dyadic_tau_sigma: requires a odd, v2(b) = 2, v2(c) >= 3");
  const BigInt b2 = unit_part(b, 2);
  const BigInt c2 = unit_part(c, 2);
  const long l = vc.get() - 2;

  const BigInt ab2p1 = a * b2 + 1;
  if (residue_mod(ab2p1, 2) != 0)
    throw std::domain_error("dyadic_tau_sigma: a*b2 + 1 must be even");
  const BigInt middle_unit = (variant == TauVariant::Statement) ? b2 * b2 : b2;
  const BigInt arg = b2 * b2 * b2 * b2 + middle_unit * (ab2p1 / 2) + (BigInt(1) << (l - 1)) * c2;

  TauSigma out;
  out.tau = val_p(arg, 2);
  // sigma = v2(2 b2^2 + (3 a b2 + 1)/4), evaluated integrally as
  // v2(8 b2^2 + 3 a b2 + 1) - 2 when the inner valuation allows it.
  Valuation inner = val_p(8 * b2 * b2 + 3 * a * b2 + 1, 2);
  if (inner.is_infinite()) {
    out.sigma = Valuation::infinity();
  } else if (inner.get() < 2) {
    out.sigma = Valuation::infinity();
    out.sigma_integral = false;
  } else {
    out.sigma = Valuation::finite(inner.get() - 2);
  }
  return out;
}

std::vector<TheoremMatch> match_theorem1(const BigInt& a, const BigInt& b, const BigInt& c,
                                         const MatchOptions& opts) {
  std::vector<TheoremMatch> out;
  auto emit = [&](int case_number, CaseParameters params) {
    CaseOutcome oc = expected_outcome(1, case_number);
    out.push_back(TheoremMatch{1, case_number, oc.p, oc.nu, oc.shape, std::move(params)});
  };

  for (int cse = 1; cse <= 3; ++cse)
    if (triple_listed(theorem1_triples(cse), a, b, c)) emit(cse, {});
  for (int cse = 4; cse <= 6; ++cse)
    if (pair_listed(theorem1_pairs(cse), a, b, c)) emit(cse, {});

  // Cases (7)-(8): (a, b, c) == (6, 10, 15) mod 16 with conditions on
  // mu = v2(1+a+b+c) and nu = v2(4+3a+b).
  if (residue_mod(a, 16) == 6 && residue_mod(b, 16) == 10 && residue_mod(c, 16) == 15) {
    Valuation mu = val_p(1 + a + b + c, 2);
    Valuation nu = val_p(4 + 3 * a + b, 2);
    CaseParameters params;
    params.mu = mu;
    params.nu = nu;
    if (mu.is_finite() && mu.get() > 7 && mu.get() % 2 == 0 && twice_gt(nu, mu.get() + 3))
      emit(7, params);
    if (nu.is_finite() && nu.get() > 5 &&
        (mu.is_infinite() || twice_lt(nu, mu.get() + 3)))
      emit(8, params);
  }

  // Case (9): (a, b, c) == (1, 0, 0) mod 2, 3 v2(b) < 2 v2(c), v2(b) odd.
  if (residue_mod(a, 2) == 1 && residue_mod(b, 2) == 0 && residue_mod(c, 2) == 0) {
    Valuation vb = val_p(b, 2);
    Valuation vc = val_p(c, 2);
    if (vb.is_finite() && vb.get() % 2 == 1 &&
        (vc.is_infinite() || 3 * vb.get() < 2 * vc.get()))
      emit(9, {});
  }

  // Cases (10)-(12) and (16)-(17): b == 4 mod 8 (so v2(b) = 2, b2 = b/4).
  if (residue_mod(b, 8) == 4) {
    const BigInt b2 = unit_part(b, 2);
    const long ab2p1_mod4 = residue_mod(a * b2 + 1, 4);
    const Valuation vc = val_p(c, 2);

    if (ab2p1_mod4 == 0 && residue_mod(c, 32) == 0) emit(10, {});
    if (ab2p1_mod4 == 2 && residue_mod(c, 32) == 16) emit(11, {});
    if (residue_mod(a * b2 + 1, 8) == 0 && residue_mod(c, 32) == 16) {
      const BigInt c2 = unit_part(c, 2);
      if (residue_mod(b2 * b2 * b2 * b2 + c2, 4) == 0) emit(12, {});
    }

    if (ab2p1_mod4 == 2 && vc.is_finite() && vc.get() >= 4) {
      const long l = vc.get() - 2;  // v2(c) = 2 + l with l >= 2
      TauSigma ts = dyadic_tau_sigma(a, b, c, opts.tau_variant);
      CaseParameters params;
      params.tau = ts.tau;
      params.sigma = ts.sigma;
      params.l = l;
      const bool tau_lt = ts.sigma.is_infinite()
                              ? ts.tau.is_finite()
                              : (ts.tau.is_finite() && ts.tau.get() < 3 + 2 * ts.sigma.get());
      const bool tau_gt = ts.sigma.is_finite() &&
                          (ts.tau.is_infinite() || ts.tau.get() > 3 + 2 * ts.sigma.get());
      if (tau_lt && ts.tau.is_finite() && ts.tau.get() % 2 == 0) emit(16, params);
      if (tau_gt) emit(17, params);
    }
  }

  // Cases (13)-(15): v2(b) = 2k with k >= 2.
  {
    const Valuation vb = val_p(b, 2);
    if (vb.is_finite() && vb.get() >= 4 && vb.get() % 2 == 0) {
      const long k = vb.get() / 2;
      const BigInt b2 = unit_part(b, 2);
      const BigInt ab2p1 = a * b2 + 1;
      const Valuation vc = val_p(c, 2);
      if (vc.is_finite()) {
        CaseParameters params;
        params.k = k;
        if (residue_mod(ab2p1, 4) == 0 && vc.get() == 3 * k + 1) emit(13, params);
        if (vc.get() >= 3 * k + 2) {
          const long l = vc.get() - 3 * k;
          params.l = l;
          if (residue_mod(ab2p1, 4) == 2) emit(14, params);
          if (residue_mod(ab2p1, 4) == 0) {
            // E = 2^{k-2} b2^4 + b2^2 (a b2 + 1)/4 + 2^{l-2} c2 must be even.
            const BigInt c2 = unit_part(c, 2);
            const BigInt E = (BigInt(1) << (k - 2)) * b2 * b2 * b2 * b2 +
                             b2 * b2 * (ab2p1 / 4) + (BigInt(1) << (l - 2)) * c2;
            if (residue_mod(E, 2) == 0) emit(15, params);
          }
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const TheoremMatch& x, const TheoremMatch& y) { return x.case_number < y.case_number; });
  return out;
}

std::vector<TheoremMatch> match_theorem2(const BigInt& a, const BigInt& b, const BigInt& c,
                                         const MatchOptions& opts) {
  std::vector<TheoremMatch> out;
  auto emit = [&](int case_number, CaseParameters params) {
    CaseOutcome oc = expected_outcome(2, case_number);
    out.push_back(TheoremMatch{2, case_number, oc.p, oc.nu, oc.shape, std::move(params)});
  };

  // Case (1): a == +-1 mod 3, b == c == 0 mod 3, 3 v3(b) < 2 v3(c),
  // v3(b) even, b3 == -a mod 3.
  if (residue_mod(a, 3) != 0 && residue_mod(b, 3) == 0 && residue_mod(c, 3) == 0 && b != 0) {
    Valuation vb = val_p(b, 3);
    Valuation vc = val_p(c, 3);
    if (vb.get() % 2 == 0 && (vc.is_infinite() || 3 * vb.get() < 2 * vc.get()) &&
        residue_mod(unit_part(b, 3) + a, 3) == 0)
      emit(1, {});
  }

  // Case (2): pair list; mu = v3(1-a-b+c), nu = v3(-4+3a+b), with
  // (i) 2 nu < mu + 1, or (ii) 2 nu > mu + 1, mu odd, (1-a-b+c)_3 == 1 mod 3.
  if (pair_listed(theorem2_pairs(2), a, b, c)) {
    const BigInt m = 1 - a - b + c;
    Valuation mu = val_p(m, 3);
    Valuation nu = val_p(-4 + 3 * a + b, 3);
    CaseParameters params;
    params.mu = mu;
    params.nu = nu;
    const bool cond_i = mu.is_infinite() ? nu.is_finite() : twice_lt(nu, mu.get() + 1);
    const bool cond_ii = mu.is_finite() && twice_gt(nu, mu.get() + 1) && mu.get() % 2 == 1 &&
                         residue_mod(unit_part(m, 3), 3) == 1;
    if (cond_i || cond_ii) emit(2, params);
  }

  // Case (3): pair list (both modulus readings honored via opts); omega =
  // v3(1+a+b+c), tau = v3(4+3a+b), with (i) 2 tau < omega + 1, or (ii)
  // 2 tau > omega + 1, omega odd, (1+a+b+c)_3 == 1 mod 3.
  if (pair_listed(theorem2_pairs(3, opts.theorem2_case3_list_modulus), a, b, c)) {
    const BigInt w = 1 + a + b + c;
    Valuation omega = val_p(w, 3);
    Valuation tau = val_p(4 + 3 * a + b, 3);
    CaseParameters params;
    params.omega = omega;
    params.tau = tau;
    const bool cond_i = omega.is_infinite() ? tau.is_finite() : twice_lt(tau, omega.get() + 1);
    const bool cond_ii = omega.is_finite() && twice_gt(tau, omega.get() + 1) &&
                         omega.get() % 2 == 1 && residue_mod(unit_part(w, 3), 3) == 1;
    if (cond_i || cond_ii) emit(3, params);
  }

  // Case (4): pair list with a + b == c + 1 (mod 81) only.
  if (pair_listed(theorem2_pairs(4), a, b, c)) emit(4, {});

  return out;
}

}  // namespace qindex
