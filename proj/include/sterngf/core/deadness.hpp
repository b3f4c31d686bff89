#pragma once

// Dead-state detection. At level n factor i is supported on
//   k in [-s_i, U(n) - s_i],  s_i = d_i - <beta_i, F(n)>,
// where [0, U(n)] contains the support of F_n(x) and
//   U(n) = deg P + sum_{i<n} max_j <e_j, F(i)>.
// The intervals meet iff max s - min s <= U(n), so a state is zero at level
// n whenever that gap exceeds U(n). Levels up to the horizon are checked
// exactly; past it one pair (hi, lo) has to stay separated, which is the
// eventual positivity of the C-finite sequence
//   t(m) = s_hi(n0+m) - s_lo(n0+m) - U(n0) - sum_{n0<=k<n0+m} <e*, F(k)>,
// e* being the degree form of the product. Anything not certified is Alive.

#include "sterngf/cfinite/positivity.hpp"
#include "sterngf/core/product_spec.hpp"
#include "sterngf/core/state.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sterngf {

enum class Liveness { Dead, Alive };

inline constexpr std::size_t kDefaultDeadHorizon = 32;

/// STERNGF_DEAD_HORIZON if set to a positive integer, else kDefaultDeadHorizon.
inline std::size_t default_dead_horizon() {
  if (const char* env = std::getenv("STERNGF_DEAD_HORIZON")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) return v;
  }
  return kDefaultDeadHorizon;
}

namespace detail {

inline bool mul_ok(__int128 a, __int128 b, __int128& out) { return !__builtin_mul_overflow(a, b, &out); }
inline bool add_ok(__int128 a, __int128 b, __int128& out) { return !__builtin_add_overflow(a, b, &out); }

}  // namespace detail

/// Memoizing deadness decision for one spec. Safe for concurrent use.
class DeadnessOracle {
 public:
  explicit DeadnessOracle(ProductSpec spec, std::size_t horizon = default_dead_horizon())
      : spec_(std::move(spec)), horizon_(horizon) {
    precompute();
  }

  const ProductSpec& spec() const { return spec_; }
  std::size_t horizon() const { return horizon_; }
  /// Last level checked exactly (limited by 128-bit range).
  std::size_t exact_levels() const { return bound_.size(); }

  Liveness check(const State& s) const {
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(s);
      if (it != memo_.end()) return it->second;
    }
    Liveness v = decide(s);
    std::unique_lock lock(mu_);
    memo_.emplace(s, v);
    return v;
  }

  bool is_dead(const State& s) const { return check(s) == Liveness::Dead; }

 private:
  void precompute() {
    const std::size_t l = spec_.order();
    // keep values far enough below 2^127 that small forms cannot overflow unnoticed
    const __int128 cap = static_cast<__int128>(1) << 100;
    std::vector<__int128> f;
    std::vector<BigInt> fb = spec_.seq().terms(horizon_ + l + 1);
    for (const auto& x : fb) {
      if (boost::multiprecision::abs(x) >= BigInt(1) << 100) break;
      f.push_back(to_int128(x));
    }
    __int128 u = spec_.p().degree();
    for (std::size_t n = 0; n <= horizon_ && n + l <= f.size(); ++n) {
      window_.emplace_back(f.begin() + static_cast<std::ptrdiff_t>(n), f.begin() + static_cast<std::ptrdiff_t>(n + l));
      bound_.push_back(u);
      __int128 best = 0;
      bool first = true, ok = true;
      for (const auto& t : spec_.terms()) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < l && ok; ++j) {
          __int128 prod;
          ok = detail::mul_ok(t.exponent[j], window_.back()[j], prod) && detail::add_ok(acc, prod, acc);
        }
        if (!ok) break;
        if (first || acc > best) best = acc;
        first = false;
      }
      if (!ok || !detail::add_ok(u, best, u) || u > cap) break;
    }
  }

  /// s_i at level n; nullopt on 128-bit overflow.
  std::optional<std::vector<__int128>> offsets_at(const State& s, std::size_t n) const {
    std::vector<__int128> out(s.arity());
    const auto& w = window_[n];
    for (std::size_t i = 0; i < s.arity(); ++i) {
      __int128 acc = 0;
      auto beta = s.beta(i);
      for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] == 0) continue;
        __int128 prod;
        if (!detail::mul_ok(beta[j], w[j], prod) || !detail::add_ok(acc, prod, acc)) return std::nullopt;
      }
      __int128 v;
      if (__builtin_sub_overflow(static_cast<__int128>(s.offset(i)), acc, &v)) return std::nullopt;
      out[i] = v;
    }
    return out;
  }

  Liveness decide(const State& s) const {
    if (s.arity() < 2) return Liveness::Alive;
    std::optional<std::vector<__int128>> last;
    std::size_t n0 = 0;
    for (std::size_t n = 0; n < bound_.size(); ++n) {
      auto off = offsets_at(s, n);
      if (!off) break;
      auto [mn, mx] = std::minmax_element(off->begin(), off->end());
      __int128 gap;
      if (__builtin_sub_overflow(*mx, *mn, &gap)) break;
      if (gap <= bound_[n]) return Liveness::Alive;
      last = std::move(off);
      n0 = n;
    }
    if (!last) return Liveness::Alive;

    // pairs separated at n0, widest first
    const auto& off = *last;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < off.size(); ++a) {
      for (std::size_t b = 0; b < off.size(); ++b) {
        if (a != b && off[a] - off[b] > bound_[n0]) pairs.emplace_back(a, b);
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto x, auto y) {
      return off[x.first] - off[x.second] > off[y.first] - off[y.second];
    });
    constexpr std::size_t kMaxPairs = 8;
    if (pairs.size() > kMaxPairs) pairs.resize(kMaxPairs);
    for (auto [hi, lo] : pairs) {
      if (tail_separated(s, hi, lo, n0)) return Liveness::Dead;
    }
    return Liveness::Alive;
  }

  bool tail_separated(const State& s, std::size_t hi, std::size_t lo, std::size_t n0) const {
    const std::size_t l = spec_.order();
    std::vector<std::int64_t> diff(l);
    for (std::size_t j = 0; j < l; ++j) {
      if (__builtin_sub_overflow(s.beta(lo)[j], s.beta(hi)[j], &diff[j])) return false;
    }
    const std::vector<BigInt> f = spec_.seq().terms(n0 + 2 * l + 1);
    const auto estar = spec_.degree_form().coeffs();
    const BigInt dgap = BigInt(s.offset(hi)) - s.offset(lo);
    std::vector<BigInt> init;
    BigInt running = to_bigint(bound_[n0]);
    for (std::size_t m = 0; m <= l; ++m) {
      std::span<const BigInt> w(f.data() + n0 + m, l);
      init.push_back(dgap + evaluate<BigInt>(diff, w) - running);
      running += evaluate<BigInt>(estar, w);
    }
    ZPoly chi = indicial_poly(spec_.seq()) * zpoly({-1, 1});
    CFiniteSeq t = from_charpoly(chi, std::move(init));
    return certify_eventually_positive(t, 2 * (l + 1)).positive();
  }

  ProductSpec spec_;
  std::size_t horizon_;
  std::vector<std::vector<__int128>> window_;  // F(n) for exactly checked levels
  std::vector<__int128> bound_;                // U(n) for the same levels
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<State, Liveness, StateHash> memo_;
};

inline Liveness is_dead(const ProductSpec& spec, const State& s) { return DeadnessOracle(spec).check(s); }

}  // namespace sterngf
