#include "qindex/polyring.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qindex {

IntPoly IntPoly::constant(BigInt k) {
  IntPoly f;
  if (k != 0) f.c.push_back(std::move(k));
  return f;
}

IntPoly IntPoly::linear_root(const BigInt& r) { return IntPoly{-r, 1}; }

IntPoly IntPoly::x_power(int k) {
  IntPoly f;
  f.c.assign(static_cast<size_t>(k) + 1, 0);
  f.c.back() = 1;
  return f;
}

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const BigInt& IntPoly::lc() const {
  if (c.empty()) throw std::domain_error("IntPoly: zero polynomial has no leading coefficient");
  return c.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly d;
  for (size_t i = 1; i < c.size(); ++i) d.c.push_back(BigInt(i) * c[i]);
  d.trim();
  return d;
}

Valuation IntPoly::val_p(const BigInt& p) const {
  Valuation best = Valuation::infinity();
  for (const auto& x : c) {
    Valuation v = qindex::val_p(x, p);
    if (v < best) best = v;
    if (best == 0) break;
  }
  return best;
}

IntPoly IntPoly::unit_part(const BigInt& p) const {
  if (is_zero()) throw std::domain_error("IntPoly::unit_part: zero polynomial");
  long v = val_p(p).get();
  if (v == 0) return *this;
  BigInt pv = pow(p, static_cast<unsigned>(v));
  IntPoly out = *this;
  for (auto& x : out.c) x /= pv;
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.coeff(i) + b.coeff(i);
  out.trim();
  return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.coeff(i) - b.coeff(i);
  out.trim();
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  IntPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.trim();
  return out;
}

IntPoly operator*(const BigInt& k, const IntPoly& a) {
  IntPoly out = a;
  for (auto& x : out.c) x *= k;
  out.trim();
  return out;
}

IntPoly operator-(const IntPoly& a) { return BigInt(-1) * a; }

IntPoly IntPoly::scalar_div_exact(const BigInt& k) const {
  if (k == 0) throw std::domain_error("IntPoly: division by zero");
  IntPoly out = *this;
  for (auto& x : out.c) {
    if (x % k != 0) throw std::domain_error("IntPoly: inexact scalar division");
    x /= k;
  }
  return out;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& k = c[static_cast<size_t>(i)];
    if (k == 0) continue;
    BigInt mag = abs(k);
    if (first) {
      if (k < 0) os << "-";
      first = false;
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolyDivMod divmod_monic(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic()) throw std::domain_error("divmod_monic: divisor must be monic");
  if (g.degree() < 1) {
    // Monic constant divisor is 1.
    return {f, IntPoly()};
  }
  IntPoly r = f;
  IntPoly q;
  long dg = g.degree();
  if (r.degree() >= dg) q.c.assign(static_cast<size_t>(r.degree() - dg) + 1, 0);
  while (r.degree() >= dg) {
    long shift = r.degree() - dg;
    BigInt k = r.lc();
    q.c[static_cast<size_t>(shift)] = k;
    for (long i = 0; i <= dg; ++i)
      r.c[static_cast<size_t>(i + shift)] -= k * g.c[static_cast<size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

IntPoly Quadrinomial::to_poly() const { return IntPoly{c, b, 0, a, 1}; }

IntPoly PhiExpansion::reassemble() const {
  IntPoly acc;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * phi + *it;
  return acc;
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::domain_error("phi_expand: phi must be monic of degree >= 1");
  PhiExpansion out;
  out.phi = phi;
  IntPoly rest = f;
  while (rest.degree() >= phi.degree()) {
    auto [q, r] = divmod_monic(rest, phi);
    out.coeff.push_back(r);
    rest = q;
  }
  out.coeff.push_back(rest);
  return out;
}

namespace {

// Determinant by Bareiss fraction-free elimination; every division is exact.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  long m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  if (m == 0) return pow(f.c[0], static_cast<unsigned>(n));
  if (n == 0) return pow(g.c[0], static_cast<unsigned>(m));
  size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<BigInt>> s(dim, std::vector<BigInt>(dim, 0));
  for (long row = 0; row < n; ++row)
    for (long i = 0; i <= m; ++i) s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = f.c[static_cast<size_t>(m - i)];
  for (long row = 0; row < m; ++row)
    for (long i = 0; i <= n; ++i) s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = g.c[static_cast<size_t>(n - i)];
  return bareiss_det(std::move(s));
}

DiscriminantData discriminant(const IntPoly& f) {
  long n = f.degree();
  if (n < 2) throw std::domain_error("discriminant: degree must be >= 2");
  DiscriminantData d;
  d.res_f_fprime = resultant(f, f.derivative());
  BigInt num = d.res_f_fprime;
  if ((n * (n - 1) / 2) % 2 != 0) num = -num;
  if (num % f.lc() != 0) throw std::logic_error("discriminant: inexact division by lc");
  d.disc = num / f.lc();
  return d;
}

bool eisenstein_at(const IntPoly& f, const BigInt& p) {
  if (!f.is_monic() || f.degree() < 1)
    throw std::domain_error("eisenstein_at: f must be monic of degree >= 1");
  for (long i = 0; i < f.degree(); ++i)
    if (f.coeff(static_cast<size_t>(i)) % p != 0) return false;
  return f.coeff(0) % (p * p) != 0;
}

namespace {

using Mat4 = std::array<std::array<BigInt, 4>, 4>;

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      BigInt acc = 0;
      for (int k = 0; k < 4; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = std::move(acc);
    }
  return out;
}

// Characteristic polynomial det(yI - A) by Faddeev-LeVerrier; the divisions
// by 2, 3, 4 are exact for integer matrices.
std::array<BigInt, 4> charpoly4(const Mat4& a) {
  std::array<BigInt, 4> coeffs;  // coeffs[k] multiplies y^{3-k}
  Mat4 m = a;
  BigInt ck;
  for (int k = 1; k <= 4; ++k) {
    if (k > 1) {
      Mat4 shifted = m;
      for (int i = 0; i < 4; ++i) shifted[i][i] += ck;
      m = mat_mul(a, shifted);
    }
    BigInt tr = m[0][0] + m[1][1] + m[2][2] + m[3][3];
    if (tr % k != 0) throw std::logic_error("charpoly4: inexact trace division");
    ck = -tr / k;
    coeffs[static_cast<size_t>(k - 1)] = ck;
  }
  return coeffs;
}

}  // namespace

IntPoly minpoly_scaled_power(const Quadrinomial& q, long s, long t, long p) {
  if (s < 1 || s > 3) throw std::domain_error("minpoly_scaled_power: s must be in [1, 3]");
  if (t < 0 || p < 2) throw std::domain_error("minpoly_scaled_power: need t >= 0, p >= 2");
  // Multiplication by alpha on the basis 1, alpha, alpha^2, alpha^3.
  Mat4 mul_alpha{};
  for (auto& row : mul_alpha) row.fill(0);
  mul_alpha[1][0] = 1;
  mul_alpha[2][1] = 1;
  mul_alpha[3][2] = 1;
  mul_alpha[0][3] = -q.c;
  mul_alpha[1][3] = -q.b;
  mul_alpha[3][3] = -q.a;
  Mat4 a = mul_alpha;
  for (long i = 1; i < s; ++i) a = mat_mul(a, mul_alpha);

  auto chi = charpoly4(a);  // chi(y) = y^4 + chi[0] y^3 + chi[1] y^2 + chi[2] y + chi[3]
  // charpoly of A / p^t: coefficient of x^{4-k} is chi[k-1] / p^{t*k}.
  IntPoly out;
  out.c.assign(5, 0);
  out.c[4] = 1;
  BigInt scale = 1;
  BigInt pt = pow(BigInt(p), static_cast<unsigned>(t));
  for (int k = 1; k <= 4; ++k) {
    scale *= pt;
    const BigInt& raw = chi[static_cast<size_t>(k - 1)];
    if (raw % scale != 0)
      throw NotIntegralError("minpoly_scaled_power: alpha^" + std::to_string(s) + "/" +
                             std::to_string(p) + "^" + std::to_string(t) + " is not integral");
    out.c[static_cast<size_t>(4 - k)] = raw / scale;
  }
  out.trim();
  return out;
}

BigInt eval_mod(const IntPoly& f, const BigInt& x, const BigInt& m) {
  if (m < 1) throw std::domain_error("eval_mod: modulus must be >= 1");
  BigInt acc = 0;
  BigInt xr = x % m;
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = (acc * xr + *it) % m;
  if (acc < 0) acc += m;
  return acc;
}

}  // namespace qindex
