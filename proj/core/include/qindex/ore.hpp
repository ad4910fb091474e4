#pragma once

#include "qindex/exactint.hpp"
#include "qindex/finitefield.hpp"
#include "qindex/newton.hpp"
#include "qindex/polyring.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qindex {

/// Thrown when a chosen lift of a residual factor divides F exactly over Z,
/// which exhibits F as reducible (the split cannot proceed p-adically, but
/// the caller learns a rational factor).
struct LiftDividesError : std::domain_error {
  explicit LiftDividesError(IntPoly lift_in)
      : std::domain_error("ore_split: lift divides F, so F is reducible"),
        lift(std::move(lift_in)) {}
  IntPoly lift;
};

/// One prime-ideal contribution: ramification index e and residue degree f.
struct SplittingPart {
  long e = 1;
  long f = 1;
  friend bool operator==(const SplittingPart& x, const SplittingPart& y) {
    return x.e == y.e && x.f == y.f;
  }
  friend bool operator<(const SplittingPart& x, const SplittingPart& y) {
    return std::pair(x.f, x.e) < std::pair(y.f, y.e);
  }
};

/// Decomposition type of p: multiset of (e, f) pairs, displayed as
/// [f1^e1, f2^e2, ...] in canonical (f, e) order.
struct SplittingShape {
  std::vector<SplittingPart> parts;

  void add(long e, long f) { parts.push_back({e, f}); }
  void sort_canonical();
  long sum_ef() const;
  std::string to_string() const;

  static SplittingShape of(std::initializer_list<SplittingPart> ps);

  friend bool operator==(const SplittingShape& x, const SplittingShape& y) {
    return x.parts == y.parts;
  }
  friend bool operator!=(const SplittingShape& x, const SplittingShape& y) { return !(x == y); }
};

/// Analysis trace of one polygon side: its residual polynomial over the
/// factor's residue field and that polynomial's factorization.
struct SideAnalysis {
  Side side;
  ResidueField::Poly residual;
  std::vector<std::pair<ResidueField::Poly, int>> residual_factors;
  bool separable = true;
  std::string residual_str;
};

/// Analysis trace of one irreducible factor of F mod p.
struct PhiAnalysis {
  GFPoly phi_bar;
  IntPoly lift;
  int multiplicity = 1;
  bool has_polygon = false;   ///< false for multiplicity-1 factors (no polygon needed)
  NewtonPolygon polygon;      ///< valid when has_polygon
  std::vector<SideAnalysis> sides;
  bool regular = true;
  long index_contribution = 0;  ///< deg(phi) * lattice point count of the polygon
  std::vector<SplittingPart> parts;  ///< contributed parts (valid when regular)
};

/// Result of running the splitting machinery for one prime.
struct OreResult {
  long p = 2;
  bool regular = true;
  SplittingShape shape;      ///< meaningful only when regular
  long index_valuation = 0;  ///< sum of polygon contributions; v_p([O_K : Z[alpha]]) iff regular
  std::vector<PhiAnalysis> phis;
  std::string irregular_reason;  ///< set when !regular
};

/// The per-factor/per-side trace doubles as the regularity report.
using RegularityReport = OreResult;

/// Residual polynomial of one side of the polygon of a phi-adic development,
/// over the residue field F_p[x]/(phi mod p).
struct ResidualPolynomial {
  Side side;
  ResidueField field;
  ResidueField::Poly coefficients;
  std::string str;
};
ResidualPolynomial residual_poly(const PhiExpansion& exp, const Side& side, long p);

/// Override the integer lift used for specific factors of F mod p (keyed by
/// the reduced factor). Lifts must be monic and reduce to their key.
using LiftOverrides = std::map<GFPoly, IntPoly>;

/// Default lift of an irreducible factor: for linear factors the balanced
/// residue representative in (-p/2, p/2] (so x - 1 at p = 2 and x, x - 1,
/// x + 1 at p = 3); otherwise coefficients kept in [0, p).
IntPoly default_lift(const GFPoly& phi_bar);

/// Run polygon + residual analysis of monic F at p using the given lifts
/// (default lifts for factors not overridden). F mod p must be nonzero and F
/// must not be divisible by any chosen lift (that would mean F is reducible).
OreResult ore_split_with_lifts(const IntPoly& F, long p, const LiftOverrides& overrides);
OreResult ore_split(const IntPoly& F, long p);
bool is_p_regular(const IntPoly& F, long p);

/// Search for lifts making F p-regular by replacing the lift x - r of a
/// repeated linear factor with x - s, s = r + p*j; when the repeated root is
/// 0 and v_p(b) = 2k > 0 for the coefficient b of x, the candidate
/// s = p^k * unit_part(b) is tried first. Nonlinear repeated factors with
/// inseparable residuals make the search fail.
struct ShiftOutcome {
  bool success = false;
  OreResult result;  ///< final attempt (regular iff success)
  std::map<GFPoly, BigInt> roots_used;  ///< root of the lift per repeated linear factor
  int attempts = 0;
};
ShiftOutcome regularize_by_shift(const IntPoly& F, long p, int max_tries = 64);

/// Dedekind's criterion: is Z[alpha] maximal at p (p does not divide
/// [O_K : Z[alpha]])? The obstruction polynomial is the witness gcd; it is
/// nonconstant exactly when Z[alpha] is not p-maximal.
struct DedekindResult {
  bool maximal = true;
  GFPoly obstruction;
};
DedekindResult dedekind_p_maximal(const IntPoly& F, long p);

}  // namespace qindex
