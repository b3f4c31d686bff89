#pragma once

// Word-size prime-field arithmetic, Chinese remaindering and rational
// reconstruction. Used by the multi-modular determinant and recurrence
// fitting code; never by anything whose answer is not verified or bounded.

#include "sterngf/exact/bigint.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sterngf::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 pow(u64 base, u64 e, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) r = mul(r, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return r;
}

/// Inverse modulo a prime; a must be nonzero mod p.
inline u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modular inverse of zero");
  return pow(a, p - 2, p);
}

inline u64 from_signed(std::int64_t x, u64 p) {
  if (x >= 0) return static_cast<u64>(x) % p;
  u64 m = static_cast<u64>(-(x + 1)) + 1;
  m %= p;
  return m == 0 ? 0 : p - m;
}

inline u64 reduce(const BigInt& x, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(raw(x), p);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The i-th prime below 2^62, in decreasing order. Thread-safe, cached.
inline u64 prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mu);
  u64 next = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
  while (cache.size() <= i) {
    while (!is_prime(next)) next -= 2;
    cache.push_back(next);
    next -= 2;
  }
  return cache[i];
}

/// Incremental CRT: keeps value in [0, modulus).
class CrtAccumulator {
 public:
  void add(u64 residue, u64 p) {
    if (modulus_ == 0) {
      value_ = residue;
      modulus_ = p;
      return;
    }
    // value + modulus * k == residue (mod p)
    u64 vm = reduce(value_, p);
    u64 mm = reduce(modulus_, p);
    u64 k = mul(sub(residue, vm, p), inv(mm, p), p);
    value_ += modulus_ * k;
    modulus_ *= p;
  }

  const BigInt& value() const { return value_; }
  const BigInt& modulus() const { return modulus_; }

  /// Representative in (-modulus/2, modulus/2].
  BigInt symmetric() const {
    BigInt half = modulus_ / 2;
    if (value_ > half) return value_ - modulus_;
    return value_;
  }

 private:
  BigInt value_ = 0;
  BigInt modulus_ = 0;
};

/// Wang's rational reconstruction: the unique n/d with |n|, d <= sqrt(m/2)
/// and n == a*d (mod m), if it exists.
inline std::optional<BigRat> reconstruct_rational(const BigInt& a, const BigInt& m) {
  BigInt bound = boost::multiprecision::sqrt(BigInt(m / 2));
  BigInt r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  BigInt s0 = 0, s1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1 == 0 || boost::multiprecision::abs(s1) > bound) return std::nullopt;
  if (boost::multiprecision::gcd(r1, s1) != 1) return std::nullopt;
  BigRat out(r1, s1);
  return out;
}

}  // namespace sterngf::modular
