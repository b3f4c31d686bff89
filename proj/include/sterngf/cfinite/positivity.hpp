#pragma once

// Sound positivity certificates for C-finite sequences.
//
// Values up to the horizon are checked exactly. Beyond it, a sequence with
// characteristic polynomial chi is certified by peeling:
//   * chi = 1: the sequence is identically zero;
//   * chi = X^K - sum c_j X^{K-j} with every c_j >= 0: a nonnegative
//     (positive) window of K consecutive values propagates forever;
//   * chi(lambda) = 0 for an integer lambda >= 1: with q(n) = h(n+1) - lambda h(n)
//     annihilated by chi / (X - lambda), h(s) > 0 and q >= 0 from s on give
//     h(n+1) >= lambda h(n) > 0;
//   * chi(0) = 0: drop the factor X and move the window by one.
// Anything else is Unknown.

#include "sterngf/cfinite/cfinite.hpp"

#include <cstdint>
#include <vector>

namespace sterngf {

inline constexpr std::size_t kDefaultHorizon = 64;

struct PositivityVerdict {
  enum class Kind { PositiveForAll, NotAlwaysPositive, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t witness = 0;  // first violating index for NotAlwaysPositive

  bool positive() const { return kind == Kind::PositiveForAll; }
};

namespace detail {

inline std::vector<BigInt> positive_integer_roots(const ZPoly& chi) {
  std::vector<BigInt> roots;
  const BigInt c0 = boost::multiprecision::abs(chi[0]);
  if (c0 == 0) return roots;
  constexpr std::uint64_t kMaxTrial = 1U << 20;
  for (std::uint64_t d = 1; d <= kMaxTrial && BigInt(d) * d <= c0; ++d) {
    if (c0 % d != 0) continue;
    for (BigInt cand : {BigInt(d), BigInt(c0 / d)}) {
      if (chi(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
    }
  }
  return roots;
}

/// Claims h(n) >= 0 (strict: > 0) for every n >= s, where window = h(s..s+K-1)
/// and chi (monic, degree K) annihilates h.
inline bool tail_holds(const ZPoly& chi, const std::vector<BigInt>& window, bool strict, int depth = 0) {
  const int k = chi.degree();
  if (k == 0) return !strict;
  if (depth > 16) return false;

  auto ok = [strict](const BigInt& x) { return strict ? x > 0 : x >= 0; };

  bool nonneg_rec = true, some_positive = false;
  for (int j = 1; j <= k; ++j) {
    const BigInt& c = chi[static_cast<std::size_t>(k - j)];  // equals -c_j
    if (c > 0) nonneg_rec = false;
    if (c < 0) some_positive = true;
  }
  if (nonneg_rec && (some_positive || !strict)) {
    bool all = true;
    for (const auto& x : window) all = all && ok(x);
    if (all) return true;
  }

  if (!ok(window[0])) return false;

  if (chi[0] == 0) {
    ZPoly psi(std::vector<BigInt>(chi.coeffs().begin() + 1, chi.coeffs().end()));
    std::vector<BigInt> w(window.begin() + 1, window.end());
    if (psi.degree() == 0) return !strict;  // h vanishes from s+1 on
    return tail_holds(psi, w, strict, depth + 1);
  }

  for (const BigInt& lambda : positive_integer_roots(chi)) {
    auto psi = exact_quotient(chi, zpoly({0, 1}) - ZPoly{lambda});
    if (!psi) continue;
    std::vector<BigInt> q;
    for (int i = 0; i + 1 < k; ++i) {
      q.push_back(window[static_cast<std::size_t>(i + 1)] - lambda * window[static_cast<std::size_t>(i)]);
    }
    if (tail_holds(*psi, q, false, depth + 1)) return true;
  }
  return false;
}

inline PositivityVerdict certify(const CFiniteSeq& h, std::size_t horizon, bool strict) {
  const ZPoly chi = indicial_poly(h);
  const std::size_t k = h.order();
  constexpr std::size_t kExtraStarts = 8;
  std::vector<BigInt> v = h.terms(horizon + 1 + k + kExtraStarts);
  auto ok = [strict](const BigInt& x) { return strict ? x > 0 : x >= 0; };
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (!ok(v[n])) return {PositivityVerdict::Kind::NotAlwaysPositive, n};
  }
  for (std::size_t s = horizon; s <= horizon + kExtraStarts; ++s) {
    if (s > horizon && !ok(v[s])) return {PositivityVerdict::Kind::NotAlwaysPositive, s};
    std::vector<BigInt> window(v.begin() + static_cast<std::ptrdiff_t>(s),
                               v.begin() + static_cast<std::ptrdiff_t>(s + k));
    if (tail_holds(chi, window, strict)) return {PositivityVerdict::Kind::PositiveForAll, 0};
  }
  return {PositivityVerdict::Kind::Unknown, 0};
}

}  // namespace detail

/// PositiveForAll only with a proof that h(n) > 0 for every n >= 0.
inline PositivityVerdict certify_eventually_positive(const CFiniteSeq& h, std::size_t horizon = kDefaultHorizon) {
  return detail::certify(h, horizon, true);
}

/// As above, for h(n) >= 0.
inline PositivityVerdict certify_nonnegative(const CFiniteSeq& h, std::size_t horizon = kDefaultHorizon) {
  return detail::certify(h, horizon, false);
}

}  // namespace sterngf
