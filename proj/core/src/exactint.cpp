#include "qindex/exactint.hpp"

#include <vector>

namespace qindex {

std::string SquarefreeStatus::to_string() const {
  switch (kind) {
    case Kind::Squarefree:
      return "squarefree";
    case Kind::NotSquarefree:
      return "not squarefree (divisible by " + witness.str() + "^2)";
    case Kind::UnknownBeyondBound:
      return "unknown beyond trial-division bound " + std::to_string(bound);
  }
  return "?";
}

Valuation val_p(const BigInt& m, const BigInt& p) {
  if (p < 2) throw std::domain_error("val_p: p must be >= 2");
  if (m == 0) return Valuation::infinity();
  BigInt n = abs(m);
  if (p == 2) return Valuation::finite(static_cast<long>(lsb(n)));
  long v = 0;
  BigInt q, r;
  for (;;) {
    divide_qr(n, p, q, r);
    if (r != 0) break;
    n = q;
    ++v;
  }
  return Valuation::finite(v);
}

BigInt unit_part(const BigInt& m, const BigInt& p) {
  if (m == 0) throw std::domain_error("unit_part: undefined for m = 0");
  long v = val_p(m, p).get();
  if (v == 0) return m;
  return m / pow(p, static_cast<unsigned>(v));
}

PowerDecomposition solve_diophantine_st(long nc) {
  if (nc <= 0 || nc % 2 == 0)
    throw std::domain_error("solve_diophantine_st: nc must be positive and odd");
  for (long s = 0; s < 4; ++s) {
    long long prod = static_cast<long long>(nc) * s;
    if ((prod - 1) % 4 == 0 && prod >= 1) return {s, static_cast<long>((prod - 1) / 4)};
  }
  throw std::logic_error("solve_diophantine_st: no solution (unreachable for odd nc)");
}

SquarefreeStatus squarefree_check(const BigInt& m, std::uint64_t bound) {
  SquarefreeStatus st;
  if (m == 0) {
    st.kind = SquarefreeStatus::Kind::NotSquarefree;
    st.witness = 2;
    return st;
  }
  BigInt n = abs(m);
  // 2, 3, then 6k+-1: composite candidates cannot divide the remaining cofactor.
  auto strip = [&](const BigInt& d) -> bool {
    if (n % d != 0) return false;
    n /= d;
    if (n % d == 0) {
      st.kind = SquarefreeStatus::Kind::NotSquarefree;
      st.witness = d;
      return true;
    }
    return false;
  };
  if (bound >= 2 && strip(2)) return st;
  if (bound >= 3 && strip(3)) return st;
  for (std::uint64_t d = 5; d <= bound && BigInt(d) * d <= n; d += 6) {
    if (strip(d)) return st;
    if (d + 2 <= bound && strip(d + 2)) return st;
  }
  if (n == 1 || BigInt(bound) * bound >= n) {
    // Fully factored, or the cofactor is prime (any composite this small would
    // have had a factor below the bound).
    st.kind = SquarefreeStatus::Kind::Squarefree;
    return st;
  }
  st.kind = SquarefreeStatus::Kind::UnknownBeyondBound;
  st.bound = bound;
  return st;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * 2; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return out;
}

}  // namespace qindex
