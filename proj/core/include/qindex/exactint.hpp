#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qindex {

/// Unbounded signed integer. All arithmetic in the library is exact; nothing
/// is ever rounded through floating point.
using BigInt = boost::multiprecision::cpp_int;

/// A p-adic valuation: a non-negative integer, or infinite (valuation of 0).
/// Infinity compares greater than every finite value.
class Valuation {
 public:
  Valuation() : finite_(true), v_(0) {}

  static Valuation finite(long v) {
    if (v < 0) throw std::domain_error("Valuation: negative finite value");
    Valuation x;
    x.v_ = v;
    return x;
  }
  static Valuation infinity() {
    Valuation x;
    x.finite_ = false;
    return x;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  /// Finite value. Throws if infinite.
  long get() const {
    if (!finite_) throw std::domain_error("Valuation: infinite has no finite value");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  friend bool operator==(const Valuation& a, long b) { return a.finite_ && a.v_ == b; }
  friend bool operator<(const Valuation& a, long b) { return a.finite_ && a.v_ < b; }
  friend bool operator>(const Valuation& a, long b) { return !a.finite_ || a.v_ > b; }
  friend bool operator>=(const Valuation& a, long b) { return !a.finite_ || a.v_ >= b; }
  friend bool operator<=(const Valuation& a, long b) { return a.finite_ && a.v_ <= b; }

  std::string to_string() const { return finite_ ? std::to_string(v_) : "inf"; }

 private:
  bool finite_;
  long v_ = 0;
};

/// Outcome of a bounded squarefreeness test.
struct SquarefreeStatus {
  enum class Kind { Squarefree, NotSquarefree, UnknownBeyondBound };

  Kind kind = Kind::UnknownBeyondBound;
  BigInt witness;        // prime q with q^2 dividing the input (NotSquarefree only)
  std::uint64_t bound = 0;  // trial-division bound used (UnknownBeyondBound only)

  bool squarefree() const { return kind == Kind::Squarefree; }
  bool not_squarefree() const { return kind == Kind::NotSquarefree; }
  bool unknown() const { return kind == Kind::UnknownBeyondBound; }
  std::string to_string() const;
};

/// nu_p(m): exponent of p in m. Infinite exactly when m = 0. p must be >= 2.
Valuation val_p(const BigInt& m, const BigInt& p);

/// m / p^{nu_p(m)}, sign preserved. Throws std::domain_error for m = 0.
BigInt unit_part(const BigInt& m, const BigInt& p);

/// Solution of nc*s - 4t = 1 with 0 <= s < 4 (unique since gcd(nc,4)=1 for odd
/// nc). Throws std::domain_error when nc is even or not positive.
struct PowerDecomposition {
  long s;
  long t;
};
PowerDecomposition solve_diophantine_st(long nc);

/// Trial division of |m| by every prime <= bound.
///   NotSquarefree(q)       some prime q <= bound has q^2 | m
///   Squarefree             fully factored below the bound, no repeats
///   UnknownBeyondBound     a cofactor > 1 with no prime factor <= bound remains
/// m = 0 counts as NotSquarefree(2) (every square divides 0).
SquarefreeStatus squarefree_check(const BigInt& m, std::uint64_t bound);

/// Primes up to n (inclusive), by sieve. Intended for small n.
std::vector<long> primes_up_to(long n);

}  // namespace qindex
