#include "qindex/finitefield.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace qindex {

namespace {

long mod_norm(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long mod_inv_scalar(long a, long p) {
  // Extended Euclid on (a, p); a nonzero mod p.
  long t = 0, new_t = 1;
  long r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("mod_inv_scalar: not invertible");
  return mod_norm(t, p);
}

void check_prime_supported(long p) {
  if (p < 2 || p > kMaxFactorPrime)
    throw UnsupportedPrimeError("exhaustive factorization supports primes in [2, " +
                                std::to_string(kMaxFactorPrime) + "], got " + std::to_string(p));
}

}  // namespace

GFPoly::GFPoly(long prime, std::vector<long> coeffs) : p(prime), c(std::move(coeffs)) {
  if (p < 2) throw std::domain_error("GFPoly: modulus must be >= 2");
  normalize();
}

void GFPoly::normalize() {
  for (auto& v : c) v = mod_norm(v, p);
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long GFPoly::lc() const {
  if (c.empty()) throw std::domain_error("GFPoly::lc of zero polynomial");
  return c.back();
}

long GFPoly::eval(long x) const {
  long acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = mod_norm(acc * x + c[i], p);
  return acc;
}

bool operator<(const GFPoly& a, const GFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Same length: compare from the leading coefficient down.
  for (size_t i = a.c.size(); i-- > 0;)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

std::string GFPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i > 0) {
      if (c[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

GFPoly gf_reduce(const IntPoly& f, long p) {
  if (p < 2) throw std::domain_error("gf_reduce: modulus must be >= 2");
  std::vector<long> out(f.c.size());
  const BigInt bp = p;
  for (size_t i = 0; i < f.c.size(); ++i) {
    BigInt r = f.c[i] % bp;
    if (r < 0) r += bp;
    out[i] = static_cast<long>(r);
  }
  return GFPoly(p, std::move(out));
}

static void require_same_p(const GFPoly& a, const GFPoly& b) {
  if (a.p != b.p) throw std::domain_error("GFPoly: mixed moduli");
}

GFPoly gf_add(const GFPoly& a, const GFPoly& b) {
  require_same_p(a, b);
  std::vector<long> out(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return GFPoly(a.p, std::move(out));
}

GFPoly gf_sub(const GFPoly& a, const GFPoly& b) {
  require_same_p(a, b);
  std::vector<long> out(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return GFPoly(a.p, std::move(out));
}

GFPoly gf_mul(const GFPoly& a, const GFPoly& b) {
  require_same_p(a, b);
  if (a.is_zero() || b.is_zero()) return GFPoly::zero(a.p);
  std::vector<long> out(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      out[i + j] = mod_norm(out[i + j] + a.c[i] * b.c[j], a.p);
    }
  }
  return GFPoly(a.p, std::move(out));
}

GFPoly gf_scale(long k, const GFPoly& a) {
  std::vector<long> out = a.c;
  for (auto& v : out) v = mod_norm(v * mod_norm(k, a.p), a.p);
  return GFPoly(a.p, std::move(out));
}

std::pair<GFPoly, GFPoly> gf_divmod(const GFPoly& a, const GFPoly& b) {
  require_same_p(a, b);
  if (b.is_zero()) throw std::domain_error("gf_divmod: division by zero");
  const long p = a.p;
  std::vector<long> rem = a.c;
  long db = b.degree();
  if (a.degree() < db) return {GFPoly::zero(p), a};
  std::vector<long> quo(a.degree() - db + 1, 0);
  const long lb_inv = mod_inv_scalar(b.lc(), p);
  for (long i = a.degree(); i >= db; --i) {
    long lead = mod_norm(rem[static_cast<size_t>(i)], p);
    if (lead == 0) continue;
    long q = mod_norm(lead * lb_inv, p);
    quo[static_cast<size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j) {
      size_t idx = static_cast<size_t>(i - db + j);
      rem[idx] = mod_norm(rem[idx] - q * b.coeff(static_cast<size_t>(j)), p);
    }
  }
  return {GFPoly(p, std::move(quo)), GFPoly(p, std::move(rem))};
}

GFPoly gf_derivative(const GFPoly& a) {
  if (a.degree() < 1) return GFPoly::zero(a.p);
  std::vector<long> out(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    out[i - 1] = mod_norm(a.c[i] * static_cast<long>(i % static_cast<size_t>(a.p)), a.p);
  return GFPoly(a.p, std::move(out));
}

GFPoly gf_monic(const GFPoly& a) {
  if (a.is_zero()) return a;
  return gf_scale(mod_inv_scalar(a.lc(), a.p), a);
}

GFPoly gf_gcd(const GFPoly& a, const GFPoly& b) {
  require_same_p(a, b);
  GFPoly x = a, y = b;
  while (!y.is_zero()) {
    GFPoly r = gf_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return gf_monic(x);
}

GFPoly gf_pow_mod(const GFPoly& base, const BigInt& e, const GFPoly& modulus) {
  if (e < 0) throw std::domain_error("gf_pow_mod: negative exponent");
  GFPoly result = GFPoly::constant(base.p, 1);
  GFPoly acc = gf_divmod(base, modulus).second;
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = gf_divmod(gf_mul(result, acc), modulus).second;
    acc = gf_divmod(gf_mul(acc, acc), modulus).second;
    k >>= 1;
  }
  return result;
}

namespace {

/// Visit all monic polynomials of exact degree d over F_p; stop early when the
/// visitor returns true. Returns whether a visitor accepted.
bool for_each_monic_impl(long p, long d, const std::function<bool(const GFPoly&)>& visit) {
  std::vector<long> coeffs(static_cast<size_t>(d) + 1, 0);
  coeffs.back() = 1;
  while (true) {
    GFPoly cand(p, coeffs);
    if (visit(cand)) return true;
    // Odometer increment over the d low coefficients.
    long i = 0;
    while (i < d && ++coeffs[static_cast<size_t>(i)] == p) {
      coeffs[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == d) return false;
  }
}

}  // namespace

bool is_irreducible_mod_p(const GFPoly& g) {
  check_prime_supported(g.p);
  if (!g.is_monic() || g.degree() < 1)
    throw std::domain_error("is_irreducible_mod_p: need a monic polynomial of degree >= 1");
  if (g.degree() == 1) return true;
  for (long d = 1; 2 * d <= g.degree(); ++d) {
    bool found = for_each_monic_impl(g.p, d, [&](const GFPoly& cand) {
      return gf_divmod(g, cand).second.is_zero();
    });
    if (found) return false;
  }
  return true;
}

ModFactorization gf_factor(const GFPoly& f) {
  check_prime_supported(f.p);
  if (f.is_zero()) throw std::domain_error("gf_factor: zero polynomial");
  ModFactorization out;
  out.p = f.p;
  out.unit = f.lc();
  GFPoly rest = gf_monic(f);
  // Trial division by monic polynomials of increasing degree; every divisor
  // found this way is irreducible because smaller-degree factors are gone.
  for (long d = 1; d <= rest.degree(); ++d) {
    if (rest.degree() < 2 * d) break;  // rest itself is irreducible below
    for_each_monic_impl(f.p, d, [&](const GFPoly& cand) {
      int mult = 0;
      while (true) {
        auto [q, r] = gf_divmod(rest, cand);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(cand, mult);
      return rest.degree() < 2 * d;  // stop scanning this degree when done
    });
  }
  if (rest.degree() >= 1) out.factors.emplace_back(rest, 1);
  return out;
}

ModFactorization factor_mod_p(const IntPoly& f, long p) {
  GFPoly g = gf_reduce(f, p);
  if (g.is_zero()) throw std::domain_error("factor_mod_p: polynomial vanishes mod p");
  return gf_factor(g);
}

std::string ModFactorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (unit != 1 || factors.empty()) {
    os << unit;
    first = false;
  }
  for (const auto& [g, m] : factors) {
    if (!first) os << " * ";
    first = false;
    os << "(" << g.to_string() << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ResidueField
// ---------------------------------------------------------------------------

ResidueField::ResidueField(GFPoly modulus) : mod_(std::move(modulus)) {
  if (mod_.degree() < 1 || !mod_.is_monic())
    throw std::domain_error("ResidueField: modulus must be monic of degree >= 1");
  if (mod_.p <= kMaxFactorPrime && !is_irreducible_mod_p(mod_))
    throw std::domain_error("ResidueField: modulus is reducible");
  order_ = 1;
  for (long i = 0; i < mod_.degree(); ++i) order_ *= mod_.p;
}

ResidueField::Elem ResidueField::reduce(const GFPoly& a) const {
  if (a.p != mod_.p) throw std::domain_error("ResidueField::reduce: wrong characteristic");
  return gf_divmod(a, mod_).second;
}

ResidueField::Elem ResidueField::inv(const Elem& a0) const {
  Elem a = reduce(a0);
  if (a.is_zero()) throw std::domain_error("ResidueField::inv of zero");
  // Extended Euclid over F_p[x]: s*a + t*mod = gcd.
  GFPoly r0 = mod_, r1 = a;
  GFPoly t0 = GFPoly::zero(mod_.p), t1 = GFPoly::constant(mod_.p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = gf_divmod(r0, r1);
    r0 = std::exchange(r1, r);
    t0 = std::exchange(t1, gf_sub(t0, gf_mul(q, t1)));
  }
  if (r0.degree() != 0) throw std::domain_error("ResidueField::inv: modulus not irreducible");
  return reduce(gf_scale(mod_inv_scalar(r0.lc(), mod_.p), t0));
}

std::vector<ResidueField::Elem> ResidueField::all_elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<size_t>(order_));
  std::vector<long> coeffs(static_cast<size_t>(mod_.degree()), 0);
  while (true) {
    out.emplace_back(mod_.p, coeffs);
    size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == mod_.p) {
      coeffs[i] = 0;
      ++i;
    }
    if (i == coeffs.size()) break;
  }
  return out;
}

void ResidueField::poly_trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

ResidueField::Poly ResidueField::poly_from(std::vector<Elem> coeffs) const {
  Poly out;
  out.reserve(coeffs.size());
  for (auto& e : coeffs) out.push_back(reduce(e));
  poly_trim(out);
  return out;
}

ResidueField::Poly ResidueField::poly_add(const Poly& a, const Poly& b) const {
  Poly out(std::max(a.size(), b.size()), zero());
  for (size_t i = 0; i < out.size(); ++i) {
    Elem ai = i < a.size() ? a[i] : zero();
    Elem bi = i < b.size() ? b[i] : zero();
    out[i] = add(ai, bi);
  }
  poly_trim(out);
  return out;
}

ResidueField::Poly ResidueField::poly_sub(const Poly& a, const Poly& b) const {
  Poly out(std::max(a.size(), b.size()), zero());
  for (size_t i = 0; i < out.size(); ++i) {
    Elem ai = i < a.size() ? a[i] : zero();
    Elem bi = i < b.size() ? b[i] : zero();
    out[i] = sub(ai, bi);
  }
  poly_trim(out);
  return out;
}

ResidueField::Poly ResidueField::poly_mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = add(out[i + j], mul(a[i], b[j]));
  }
  poly_trim(out);
  return out;
}

std::pair<ResidueField::Poly, ResidueField::Poly> ResidueField::poly_divmod(const Poly& a,
                                                                            const Poly& b) const {
  if (b.empty()) throw std::domain_error("ResidueField::poly_divmod: division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly rem = a;
  Poly quo(a.size() - b.size() + 1, zero());
  const Elem lead_inv = inv(b.back());
  const long db = poly_degree(b);
  for (long i = poly_degree(a); i >= db; --i) {
    const auto ui = static_cast<size_t>(i);
    if (rem[ui].is_zero()) continue;
    Elem q = mul(rem[ui], lead_inv);
    quo[static_cast<size_t>(i - db)] = q;
    for (size_t j = 0; j < b.size(); ++j)
      rem[ui - b.size() + 1 + j] = sub(rem[ui - b.size() + 1 + j], mul(q, b[j]));
  }
  poly_trim(quo);
  poly_trim(rem);
  return {quo, rem};
}

ResidueField::Poly ResidueField::poly_derivative(const Poly& a) const {
  if (a.size() < 2) return {};
  Poly out(a.size() - 1, zero());
  for (size_t i = 1; i < a.size(); ++i)
    out[i - 1] = mul(from_int(static_cast<long>(i % static_cast<size_t>(p()))), a[i]);
  poly_trim(out);
  return out;
}

ResidueField::Poly ResidueField::poly_monic(const Poly& a) const {
  if (a.empty()) return a;
  Elem s = inv(a.back());
  Poly out = a;
  for (auto& e : out) e = mul(s, e);
  return out;
}

ResidueField::Poly ResidueField::poly_gcd(const Poly& a, const Poly& b) const {
  Poly x = a, y = b;
  while (!y.empty()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

bool ResidueField::poly_separable(const Poly& f) const {
  if (f.empty()) throw std::domain_error("poly_separable: zero polynomial");
  Poly g = poly_gcd(f, poly_derivative(f));
  return poly_degree(g) <= 0;
}

ResidueField::PolyFactorization ResidueField::poly_factor(const Poly& f) const {
  if (f.empty()) throw std::domain_error("ResidueField::poly_factor: zero polynomial");
  if (order_ > 128)
    throw UnsupportedPrimeError("ResidueField::poly_factor: field too large for exhaustive search");
  PolyFactorization out;
  out.unit = f.back();
  Poly rest = poly_monic(f);
  const auto elems = all_elements();

  // Enumerate monic polynomials of exact degree d over this field.
  auto for_each_monic_over_field = [&](long d, const std::function<bool(const Poly&)>& visit) {
    std::vector<size_t> idx(static_cast<size_t>(d), 0);
    while (true) {
      Poly cand(static_cast<size_t>(d) + 1, zero());
      for (long i = 0; i < d; ++i) cand[static_cast<size_t>(i)] = elems[idx[static_cast<size_t>(i)]];
      cand[static_cast<size_t>(d)] = one();
      if (visit(cand)) return;
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == elems.size()) {
        idx[i] = 0;
        ++i;
      }
      if (i == idx.size()) return;
    }
  };

  for (long d = 1; d <= poly_degree(rest); ++d) {
    if (poly_degree(rest) < 2 * d) break;
    for_each_monic_over_field(d, [&](const Poly& cand) {
      int mult = 0;
      while (true) {
        auto [q, r] = poly_divmod(rest, cand);
        if (!r.empty()) break;
        rest = q;
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(cand, mult);
      return poly_degree(rest) < 2 * d;
    });
  }
  if (poly_degree(rest) >= 1) out.factors.emplace_back(rest, 1);
  return out;
}

std::string ResidueField::poly_to_string(const Poly& f, const std::string& var) const {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool is_one = (f[i].degree() == 0 && f[i].coeff(0) == 1);
    if (i == 0 || !is_one) {
      if (f[i].degree() > 0)
        os << "(" << f[i].to_string() << ")";
      else
        os << f[i].to_string();
    }
    if (i > 0) {
      if (!is_one) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qindex
