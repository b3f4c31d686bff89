#pragma once

// Reconstruction of a rational generating function from its first terms.
//
// The order of a fit is the length of the shortest linear recurrence with
// constant coefficients satisfied by the data, i.e. max(deg den, deg num + 1)
// of the reduced generating function. The minimal recurrence is found by
// Berlekamp-Massey over several word-size primes, lifted by CRT plus
// rational reconstruction, and then checked exactly against every supplied
// term. A fit of order D is only accepted when at least 2*D + 1 + guard terms
// are available, so the data determines it uniquely with `guard` spare terms.

#include "sterngf/exact/modular.hpp"
#include "sterngf/exact/rational_gf.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sterngf {

struct InsufficientTermsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultGuard = 3;

struct ModRecurrence {
  std::vector<modular::u64> connection;  // c_0 = 1, size order + 1
  std::size_t order = 0;
};

/// Berlekamp-Massey over Z/p: shortest c with sum_i c_i s[n-i] = 0 for n >= order.
inline ModRecurrence berlekamp_massey(std::span<const modular::u64> s, modular::u64 p) {
  using namespace modular;
  std::vector<u64> c{1}, b{1};
  std::size_t order = 0, m = 1;
  u64 bd = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    u64 d = s[n];
    for (std::size_t i = 1; i <= order && i < c.size(); ++i) d = add(d, mul(c[i], s[n - i], p), p);
    if (d == 0) {
      ++m;
      continue;
    }
    u64 coef = mul(d, inv(bd, p), p);
    std::vector<u64> t = c;
    if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + m] = sub(c[i + m], mul(coef, b[i], p), p);
    if (2 * order <= n) {
      order = n + 1 - order;
      b = std::move(t);
      bd = d;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(order + 1, 0);
  return {std::move(c), order};
}

namespace detail {

inline bool annihilates(const std::vector<BigInt>& q, std::span<const BigInt> terms) {
  const std::size_t ord = q.size() - 1;
  for (std::size_t n = ord; n < terms.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t k = 0; k <= ord; ++k) {
      if (q[k] != 0) acc += q[k] * terms[n - k];
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Smallest-order rational generating function reproducing all of `terms`,
/// with order at most max_order; nullopt (FAIL) if none. Throws
/// InsufficientTermsError if fewer than 1 + guard terms are supplied.
inline std::optional<RationalGF> fit_recurrence(std::span<const BigInt> terms, std::size_t max_order,
                                                std::size_t guard = kDefaultGuard) {
  const std::size_t len = terms.size();
  if (len < 1 + guard) {
    throw InsufficientTermsError("fit_recurrence: need at least " + std::to_string(1 + guard) + " terms, got " +
                                 std::to_string(len));
  }
  const std::size_t max_d = std::min(max_order, (len - 1 - guard) / 2);

  constexpr std::size_t kMaxPrimes = 4096;
  std::size_t order = 0;
  bool have_order = false;
  std::vector<modular::CrtAccumulator> crt;
  std::vector<BigRat> last_rejected;
  int fail_votes = 0;
  std::vector<modular::u64> residues(len);

  for (std::size_t pi = 0; pi < kMaxPrimes; ++pi) {
    const modular::u64 p = modular::prime(pi);
    for (std::size_t i = 0; i < len; ++i) residues[i] = modular::reduce(terms[i], p);
    ModRecurrence rec = berlekamp_massey(residues, p);
    if (rec.order > max_d) {
      // An order <= max_d recurrence over Q reduces to one mod all but
      // finitely many primes; two independent refusals settle it.
      if (++fail_votes >= 2) return std::nullopt;
      continue;
    }
    if (have_order && rec.order < order) continue;
    if (!have_order || rec.order > order) {
      order = rec.order;
      have_order = true;
      crt.assign(order + 1, modular::CrtAccumulator{});
      last_rejected.clear();
    }
    for (std::size_t k = 0; k <= order; ++k) crt[k].add(rec.connection[k], p);

    std::vector<BigRat> q;
    q.reserve(order + 1);
    for (const auto& acc : crt) {
      auto r = modular::reconstruct_rational(acc.value(), acc.modulus());
      if (!r) break;
      q.push_back(*r);
    }
    if (q.size() != order + 1 || q == last_rejected) continue;

    BigInt lcm = 1;
    for (const auto& x : q) {
      const BigInt& d = boost::multiprecision::denominator(x);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<BigInt> qi;
    qi.reserve(q.size());
    for (const auto& x : q) qi.push_back(BigInt(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x))));
    if (!detail::annihilates(qi, terms)) {
      last_rejected = std::move(q);
      continue;
    }
    ZPoly den(qi);
    std::vector<BigInt> head(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(order));
    ZPoly num = (den * ZPoly(std::move(head))).truncated(order);
    return RationalGF(std::move(num), std::move(den));
  }
  throw std::runtime_error("fit_recurrence: multi-modular lifting did not converge");
}

inline std::optional<RationalGF> fit_recurrence(const std::vector<BigInt>& terms, std::size_t max_order,
                                                std::size_t guard = kDefaultGuard) {
  return fit_recurrence(std::span<const BigInt>(terms), max_order, guard);
}

}  // namespace sterngf
