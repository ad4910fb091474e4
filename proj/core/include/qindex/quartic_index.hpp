#pragma once

#include "qindex/exactint.hpp"
#include "qindex/newton.hpp"
#include "qindex/ore.hpp"
#include "qindex/polyring.hpp"
#include "qindex/theorem_tables.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qindex {

// ---------------------------------------------------------------------------
// Engstrom's index table for quartic fields: the p-part of i(K) is determined
// by the decomposition type of p alone.
// ---------------------------------------------------------------------------

struct EngstromRow {
  SplittingShape shape;  ///< canonical form; empty for the catch-all row
  int nu2 = 0;
  int nu3 = 0;
  bool catch_all = false;
};

/// The three decomposition types with a nonzero index contribution, plus the
/// catch-all row mapping every other type to (0, 0).
const std::vector<EngstromRow>& engstrom_table();

/// nu_p(i(K)) for a quartic field in which p decomposes with the given shape.
/// Requires sum e*f = 4 and p in {2, 3}; other primes never divide i(K) for
/// quartics, and callers must not ask.
long engstrom_nu(const SplittingShape& shape, long p);

// ---------------------------------------------------------------------------
// Irreducibility certification (best effort, exact).
// ---------------------------------------------------------------------------

enum class IrreducibilityStatus {
  CertifiedEisenstein,  ///< shifted-free Eisenstein certificate at prime p
  CertifiedModP,        ///< irreducible modulo p
  NoSmallFactor,        ///< complete linear + quadratic factor scan over Z found nothing
  Reducible,            ///< an explicit factor over Z was found (see factor)
  Uncertified
};

struct IrreducibilityResult {
  IrreducibilityStatus status = IrreducibilityStatus::Uncertified;
  long p = 0;                     ///< certifying prime for the first two statuses
  std::optional<IntPoly> factor;  ///< witness factor when Reducible
  bool certified() const {
    return status == IrreducibilityStatus::CertifiedEisenstein ||
           status == IrreducibilityStatus::CertifiedModP ||
           status == IrreducibilityStatus::NoSmallFactor;
  }
  bool reducible() const { return status == IrreducibilityStatus::Reducible; }
  std::string to_string() const;
};

/// Tries, in order: Eisenstein at each prime p <= 100 dividing c; mod-p
/// irreducibility for p <= 31; and, when |a|, |b|, |c| <= 10^6, a complete
/// rational-root and quadratic-factor scan over Z (conclusive either way).
/// F(+-1) = 0 and c = 0 are detected as Reducible at any size.
IrreducibilityResult certify_irreducible(const BigInt& a, const BigInt& b, const BigInt& c);

// ---------------------------------------------------------------------------
// Monogenicity.
// ---------------------------------------------------------------------------

/// theta = alpha^s / p^t, the replacement generator.
struct ThetaGenerator {
  long s = 1;
  long t = 0;
  long p = 2;
  std::string to_string() const;
};

struct MonogenicityVerdict {
  enum class Kind {
    NotMonogenic,          ///< p | i(K): no generator of O_K exists at all
    FieldMonogenicPolyNot, ///< Z[alpha] is not maximal, but O_K = Z[theta]
    Inconclusive
  };
  Kind kind = Kind::Inconclusive;
  long p = 0;  ///< the certifying prime
  std::optional<ThetaGenerator> theta;
  std::optional<SquarefreeStatus> dp_squarefree;
  std::optional<long> nu_ind_alpha;  ///< nu_p([O_K : Z[alpha]]) = 3(nu_p(c)-1)/2
  std::optional<IntPoly> theta_minpoly;
  std::string reason;
  std::string to_string() const;
};

/// Decides the "F non-monogenic but K monogenic" criterion at p:
/// min{4 nu_p(a), (4/3) nu_p(b)} > nu_p(c) > 2, nu_p(c) odd, and the p-free
/// part of disc(F) squarefree. On success returns FieldMonogenicPolyNot
/// carrying theta = alpha^s / p^t with nu_p(c) s - 4 t = 1, its p-Eisenstein
/// characteristic polynomial, and nu_p(ind alpha) = 3(nu_p(c)-1)/2 confirmed
/// against the Newton polygon. A squarefree check that exhausts its trial
/// bound leaves the verdict valid-if (recorded in dp_squarefree / reason).
/// Internal guarantees that fail (Eisenstein property, polygon count) throw
/// std::logic_error: they would mean an implementation bug.
MonogenicityVerdict check_theorem3(const BigInt& a, const BigInt& b, const BigInt& c, long p,
                                   std::uint64_t sf_bound = 1000000);

// ---------------------------------------------------------------------------
// End-to-end analysis.
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
  std::uint64_t sf_bound = 1000000;  ///< trial bound for squarefree checks
  std::vector<long> primes = {2, 3};  ///< subset of {2, 3} to run the engine at
  int shift_max_tries = 64;
  MatchOptions match;
};

/// Everything the engine knows about one prime.
struct PrimeAnalysis {
  long p = 2;
  bool conclusive = false;          ///< engine produced a regular splitting
  std::optional<OreResult> engine;  ///< the regular split when conclusive
  bool used_shift = false;
  std::vector<std::string> shift_trace;  ///< substituted roots, human-readable
  int shift_attempts = 0;
  std::optional<SplittingShape> shape;
  std::optional<long> engine_nu;   ///< engstrom_nu(shape, p) when conclusive
  std::optional<long> theorem_nu;  ///< agreed prediction of the matched cases
  long nu = 0;                     ///< the adopted value
  std::string nu_source = "undetermined";  ///< "engine" | "theorem" | "undetermined"
  std::optional<DedekindResult> dedekind;
  std::string note;  ///< e.g. why the engine was inconclusive
};

struct IndexReport {
  Quadrinomial input;
  IrreducibilityResult irreducibility;
  std::vector<PrimeAnalysis> primes;
  long nu2 = 0;
  long nu3 = 0;
  BigInt i_K = 1;  ///< 2^{nu2} * 3^{nu3}
  std::vector<TheoremMatch> matches;
  MonogenicityVerdict monogenicity;
  std::vector<std::string> caveats;
  bool internal_inconsistency = false;  ///< engine/theorem or Dedekind contradiction
  bool reducible() const { return irreducibility.reducible(); }
};

/// Full pipeline: certify irreducibility, split 2 and 3 with the polygon
/// engine (falling back to shifted generators when a lift is inseparable),
/// translate shapes through Engstrom's table, run the case matchers, and
/// cross-check everything (engine vs. matcher, Dedekind vs. nu_p > 0).
/// Disagreements are reported as caveats and flagged, never reconciled.
IndexReport analyze(const BigInt& a, const BigInt& b, const BigInt& c,
                    const AnalyzeOptions& opts = {});

// ---------------------------------------------------------------------------
// Residue-family verification.
// ---------------------------------------------------------------------------

struct FamilyCounterexample {
  BigInt a, b, c;
  std::string what;
};

struct FamilyReport {
  int theorem = 1;
  int case_number = 1;
  long p = 2;
  long classes = 0;           ///< residue classes or synthesis cells exercised
  long instances = 0;         ///< instances that were fully checked
  long shift_instances = 0;   ///< instances needing shifted generators
  long resamples = 0;         ///< rejected random draws (reducible / conditions unmet)
  std::vector<FamilyCounterexample> counterexamples;
  bool probe_applicable = false;
  long probe_candidates = 0;  ///< unlisted classes satisfying the side conditions
  /// Unlisted classes all of whose probe lifts matched the claimed outcome
  /// (each entry is the residue tuple; informational only).
  std::vector<std::vector<long>> probe_extras;
  std::vector<std::string> notes;
  bool passed() const { return counterexamples.empty() && instances > 0; }
  std::string summary() const;
};

/// Checks one theorem case empirically: for every residue class in its list
/// (or every synthesis cell, for the parameter-driven cases) generate
/// lifts_per_class deterministic random instances, and on each one assert
/// that the matcher fires, that the engine's decomposition shape equals the
/// claimed shape, that engstrom_nu equals the claimed nu_p, and (when
/// nu_p > 0) that Dedekind's criterion confirms p divides the index. Classes
/// are processed concurrently with per-class RNG streams derived from seed,
/// so reports are reproducible and order-independent. List-driven cases also
/// run a completeness probe over unlisted residue classes that satisfy the
/// case's side conditions.
FamilyReport verify_family(int theorem, int case_number, long lifts_per_class,
                           std::uint64_t seed);

}  // namespace qindex
