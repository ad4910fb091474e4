#pragma once

#include "qindex/exactint.hpp"
#include "qindex/ore.hpp"
#include "qindex/polyring.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qindex {

/// The dyadic tau parameter of cases (16)-(17) is printed in two variants
/// that disagree (b2^2 vs b2 in the middle term). Statement is the default;
/// the family verifier runs both and reports which one the engine confirms.
enum class TauVariant { Statement, ProofVariant };

struct MatchOptions {
  TauVariant tau_variant = TauVariant::Statement;
  /// The cubic case-(3) pair list is printed with modulus 243 although all
  /// entries are < 27; reading it mod 27 covers the documented instances.
  /// The family verifier exercises both readings.
  long theorem2_case3_list_modulus = 27;
};

/// Valuation/size parameters extracted while matching a case; only the
/// fields the case actually defines are set.
struct CaseParameters {
  std::optional<Valuation> mu, nu, omega, tau, sigma;
  std::optional<long> k, l;
  std::string to_string() const;
};

/// One matched sufficient condition and its prediction.
struct TheoremMatch {
  int theorem = 1;  ///< 1 (p = 2), 2 (p = 3), 3 (monogenic-field criterion)
  int case_number = 1;
  long p = 2;
  long nu_p = 0;                  ///< predicted valuation of i(K) at p
  SplittingShape expected_shape;  ///< predicted decomposition type of p
  CaseParameters params;
  std::string to_string() const;
};

/// Predicted decomposition type and nu_p(i(K)) for one case.
struct CaseOutcome {
  long p = 2;
  SplittingShape shape;
  long nu = 0;
};

/// Number of cases of a theorem (17 and 4). Throws std::out_of_range for
/// theorems without case tables.
int case_count(int theorem);
/// Throws std::out_of_range for an unknown (theorem, case) pair.
CaseOutcome expected_outcome(int theorem, int case_number);

/// A case stated as a list of (a, b, c) residue classes.
struct TripleClassList {
  long modulus = 1;
  std::vector<std::array<long, 3>> triples;  ///< distinct classes, print order
  std::string comment;  ///< transcription notes (duplicates in the source, ...)
};

/// A case stated as a list of (a, b) residue classes plus one congruence
/// linking c to a + b:  a + b == c_sign * c + c_add  (mod c_modulus).
struct PairClassList {
  long modulus = 1;
  std::vector<std::array<long, 2>> pairs;
  long c_sign = 1;
  long c_add = 0;
  long c_modulus = 1;
  std::string comment;
};

/// Data tables shared by the matchers and the family verifier.
const TripleClassList& theorem1_triples(int case_number);  ///< cases 1..3
const PairClassList& theorem1_pairs(int case_number);      ///< cases 4..6
/// Cases 2..4; case 3 honors the requested list-modulus reading (27 or 243).
const PairClassList& theorem2_pairs(int case_number, long case3_modulus = 27);

/// All cases whose congruence and valuation conditions hold, ascending case
/// number, with predictions and extracted parameters.
std::vector<TheoremMatch> match_theorem1(const BigInt& a, const BigInt& b, const BigInt& c,
                                         const MatchOptions& opts = {});
std::vector<TheoremMatch> match_theorem2(const BigInt& a, const BigInt& b, const BigInt& c,
                                         const MatchOptions& opts = {});

/// tau and sigma of the dyadic cases (16)-(17). Requires a odd, v_2(b) = 2
/// and v_2(c) >= 3 (so that every division below is exact); sigma is
/// evaluated as v_2(8 b2^2 + 3 a b2 + 1) - 2, with sigma_integral false when
/// that inner valuation is < 2 (then (3 a b2 + 1)/4 is not an integer and
/// sigma is left infinite).
struct TauSigma {
  Valuation tau;
  Valuation sigma;
  bool sigma_integral = true;
};
TauSigma dyadic_tau_sigma(const BigInt& a, const BigInt& b, const BigInt& c, TauVariant variant);

/// x mod m normalized into [0, m). Requires m >= 1.
long residue_mod(const BigInt& x, long m);

}  // namespace qindex
