#pragma once

#include "qindex/exactint.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qindex {

/// Dense univariate polynomial over Z, coefficient i belongs to x^i.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector and degree -1.
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<BigInt> coeffs) : c(coeffs) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(BigInt k);
  /// x - r
  static IntPoly linear_root(const BigInt& r);
  static IntPoly x_power(int k);

  void trim();
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const BigInt& lc() const;
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  BigInt coeff(size_t i) const { return i < c.size() ? c[i] : BigInt(0); }

  BigInt eval(const BigInt& x) const;
  IntPoly derivative() const;

  /// Gauss valuation: min nu_p over coefficients; infinite for the zero poly.
  Valuation val_p(const BigInt& p) const;
  /// Coefficient-wise division by p^{val_p}; throws on the zero polynomial.
  IntPoly unit_part(const BigInt& p) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& k, const IntPoly& a);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Coefficient-wise exact division; throws std::domain_error on nonzero remainder.
  IntPoly scalar_div_exact(const BigInt& k) const;

  std::string to_string(const std::string& var = "x") const;
};

/// Euclidean division by a monic divisor; quotient and remainder stay in Z[x].
struct IntPolyDivMod {
  IntPoly quotient;
  IntPoly remainder;
};
IntPolyDivMod divmod_monic(const IntPoly& f, const IntPoly& g);

/// x^4 + a x^3 + b x + c.
struct Quadrinomial {
  BigInt a, b, c;
  IntPoly to_poly() const;
  std::string to_string() const { return to_poly().to_string(); }
};

/// phi-adic development f = sum coeff[i] * phi^i with deg coeff[i] < deg phi.
struct PhiExpansion {
  IntPoly phi;
  std::vector<IntPoly> coeff;
  IntPoly reassemble() const;
};

/// Repeated Euclidean division by monic phi. Requires phi monic, deg phi >= 1.
PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);

/// Res(f, g) of the Sylvester matrix, evaluated by fraction-free (Bareiss)
/// elimination, so every intermediate value stays an exact integer.
BigInt resultant(const IntPoly& f, const IntPoly& g);

struct DiscriminantData {
  BigInt res_f_fprime;
  BigInt disc;  // (-1)^{n(n-1)/2} * Res(f, f') / lc(f)
};
/// Requires deg f >= 2.
DiscriminantData discriminant(const IntPoly& f);

/// p | every non-leading coefficient, p^2 does not divide the constant term.
/// Requires f monic of degree >= 1.
bool eisenstein_at(const IntPoly& f, const BigInt& p);

/// Thrown when the characteristic polynomial of alpha^s / p^t fails to have
/// integer coefficients.
struct NotIntegralError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Characteristic polynomial of theta = alpha^s / p^t acting on Q(alpha),
/// alpha a root of the quadrinomial; monic of degree 4 over Z. Equals the
/// normalized resultant Res_y(F(y), p^t x - y^s). Requires 1 <= s <= 3,
/// t >= 0, p >= 2; throws NotIntegralError when theta is not integral.
IntPoly minpoly_scaled_power(const Quadrinomial& q, long s, long t, long p);

/// f(x) mod m, result normalized into [0, m). Requires m >= 1.
BigInt eval_mod(const IntPoly& f, const BigInt& x, const BigInt& m);

}  // namespace qindex
