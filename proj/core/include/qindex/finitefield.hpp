#pragma once

#include "qindex/polyring.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qindex {

/// Thrown when an exhaustive-search routine is asked to work over a prime
/// beyond its intended range.
struct UnsupportedPrimeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Largest prime the exhaustive factoring routines accept.
inline constexpr long kMaxFactorPrime = 97;

/// Dense polynomial over F_p; coefficients normalized into [0, p).
/// Canonical form: no trailing zeros, zero polynomial has empty coefficients.
struct GFPoly {
  long p = 0;
  std::vector<long> c;

  GFPoly() = default;
  GFPoly(long prime, std::vector<long> coeffs);

  static GFPoly zero(long p) { return GFPoly(p, {}); }
  static GFPoly constant(long p, long k) { return GFPoly(p, {k}); }
  static GFPoly x_minus(long p, long r) { return GFPoly(p, {-r, 1}); }

  void normalize();
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  long lc() const;
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  long coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  long eval(long x) const;

  friend bool operator==(const GFPoly& a, const GFPoly& b) { return a.p == b.p && a.c == b.c; }
  friend bool operator!=(const GFPoly& a, const GFPoly& b) { return !(a == b); }
  friend bool operator<(const GFPoly& a, const GFPoly& b);  // lex by degree then coeffs

  std::string to_string(const std::string& var = "x") const;
};

/// Reduction of an integer polynomial mod p.
GFPoly gf_reduce(const IntPoly& f, long p);

GFPoly gf_add(const GFPoly& a, const GFPoly& b);
GFPoly gf_sub(const GFPoly& a, const GFPoly& b);
GFPoly gf_mul(const GFPoly& a, const GFPoly& b);
GFPoly gf_scale(long k, const GFPoly& a);
std::pair<GFPoly, GFPoly> gf_divmod(const GFPoly& a, const GFPoly& b);
GFPoly gf_derivative(const GFPoly& a);
/// Monic gcd (or zero when both inputs are zero).
GFPoly gf_gcd(const GFPoly& a, const GFPoly& b);
GFPoly gf_monic(const GFPoly& a);
GFPoly gf_pow_mod(const GFPoly& base, const BigInt& e, const GFPoly& modulus);

/// Complete factorization over F_p by trial division against monic
/// polynomials enumerated in increasing degree; factors come out sorted and
/// irreducible. unit * prod factor^mult reproduces the input.
struct ModFactorization {
  long p = 0;
  long unit = 1;
  std::vector<std::pair<GFPoly, int>> factors;
  std::string to_string() const;
};

/// Requires the reduction of f mod p to be nonzero; p <= kMaxFactorPrime
/// (UnsupportedPrimeError beyond, the search is exhaustive by design).
ModFactorization factor_mod_p(const IntPoly& f, long p);
ModFactorization gf_factor(const GFPoly& f);

/// Trial division by all monic polynomials of degree <= deg/2. Requires g
/// monic of degree >= 1 over a supported prime.
bool is_irreducible_mod_p(const GFPoly& g);

/// The field F_p[x]/(modulus) for monic irreducible modulus, together with
/// polynomial arithmetic over it. Elements are GFPoly values of degree less
/// than deg(modulus); "irreducible" is the caller's responsibility (checked
/// for supported primes).
class ResidueField {
 public:
  explicit ResidueField(GFPoly modulus);

  using Elem = GFPoly;
  /// Polynomial over the field, coefficient i of y^i, trailing zeros trimmed.
  using Poly = std::vector<Elem>;

  const GFPoly& modulus() const { return mod_; }
  long p() const { return mod_.p; }
  long degree() const { return mod_.degree(); }
  long order() const { return order_; }

  Elem zero() const { return GFPoly::zero(mod_.p); }
  Elem one() const { return GFPoly::constant(mod_.p, 1); }
  Elem from_int(long k) const { return GFPoly::constant(mod_.p, k); }
  Elem reduce(const GFPoly& a) const;
  Elem reduce(const IntPoly& a) const { return reduce(gf_reduce(a, mod_.p)); }

  Elem add(const Elem& a, const Elem& b) const { return gf_add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return gf_sub(a, b); }
  Elem neg(const Elem& a) const { return gf_scale(-1, a); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(gf_mul(a, b)); }
  /// Extended-Euclid inverse; std::domain_error on zero.
  Elem inv(const Elem& a) const;

  std::vector<Elem> all_elements() const;

  // -- polynomials over the field ---------------------------------------
  static void poly_trim(Poly& f);
  static long poly_degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }
  bool poly_is_zero(const Poly& f) const { return f.empty(); }
  Poly poly_from(std::vector<Elem> coeffs) const;
  Poly poly_add(const Poly& a, const Poly& b) const;
  Poly poly_sub(const Poly& a, const Poly& b) const;
  Poly poly_mul(const Poly& a, const Poly& b) const;
  std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) const;
  Poly poly_derivative(const Poly& a) const;
  Poly poly_monic(const Poly& a) const;
  Poly poly_gcd(const Poly& a, const Poly& b) const;

  /// Exhaustive factorization into monic irreducibles (with the unit factored
  /// out); input nonzero. Enumerates monic candidates by increasing degree.
  struct PolyFactorization {
    Elem unit;
    std::vector<std::pair<Poly, int>> factors;
  };
  PolyFactorization poly_factor(const Poly& f) const;

  /// gcd(f, f') has degree 0 (squarefree over a perfect field).
  bool poly_separable(const Poly& f) const;

  std::string poly_to_string(const Poly& f, const std::string& var = "y") const;

 private:
  GFPoly mod_;
  long order_;
};

/// Field-operation bundle for F_p[x]/(modulus).
inline ResidueField residue_ops(GFPoly modulus) { return ResidueField(std::move(modulus)); }

}  // namespace qindex
