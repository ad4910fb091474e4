#pragma once

#include "qindex/finitefield.hpp"
#include "qindex/polyring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace qindex::testing {

using Rational = boost::multiprecision::cpp_rational;

/// Resultant of f and g as the determinant of their Sylvester matrix,
/// computed by rational Gaussian elimination. Independent of the library's
/// Bareiss implementation.
BigInt sylvester_resultant_oracle(const IntPoly& f, const IntPoly& g);

/// disc(f) for monic f of degree n: (-1)^(n(n-1)/2) * resultant(f, f').
BigInt discriminant_oracle(const IntPoly& f);

/// Complete factorization over F_p by repeatedly splitting off the smallest
/// monic divisor (smallest degree, then lexicographic by coefficients), which
/// is automatically irreducible. Returns (factor, multiplicity) pairs sorted
/// the same way the library sorts them, plus the unit.
struct BruteFactorization {
  long unit = 1;
  std::vector<std::pair<GFPoly, int>> factors;
};
BruteFactorization brute_factor_oracle(const GFPoly& f);

/// Characteristic polynomial of the matrix (1/p^t) * C^s, where C is the
/// companion matrix of the monic quartic F, via Faddeev-LeVerrier over
/// rationals. Returns the exact rational coefficients (monic, degree 4,
/// lowest first). Independent of the library's power-basis construction.
std::vector<Rational> scaled_power_charpoly_oracle(const IntPoly& F, long s, long t, long p);

}  // namespace qindex::testing
