#pragma once

// One step of the evolution equation. With a(n,k) = sum_j c_j a(n-1, k - <e_j, F(n-1)>)
// every factor a(n, k + d - <beta, F(n)>) becomes
//   sum_j c_j a(n-1, k + d - <beta' + e_j, F(n-1)>),   beta' = shift_level(beta),
// and the product over factors expands into states one level down.

#include "sterngf/core/deadness.hpp"
#include "sterngf/core/product_spec.hpp"
#include "sterngf/core/state.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace sterngf {

struct EvolutionTerm {
  BigInt coeff;
  State target;

  friend bool operator==(const EvolutionTerm&, const EvolutionTerm&) = default;
};

/// Distinct canonical targets in ascending State order, nonzero coefficients, no dead targets.
using EvolutionRow = std::vector<EvolutionTerm>;

namespace detail {

inline __int128 checked_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("evolution coefficient exceeds 128 bits");
  return r;
}

inline __int128 checked_add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("evolution coefficient exceeds 128 bits");
  return r;
}

/// The m identical factors of one group distributed over the terms.
struct GroupChoice {
  __int128 coeff;
  std::vector<std::int64_t> blocks;  // m blocks (beta..., d)
};

inline std::vector<GroupChoice> expand_group(const ProductSpec& spec, std::span<const std::int64_t> beta_shifted,
                                             std::int64_t d, std::size_t m) {
  const auto& terms = spec.terms();
  const std::size_t nt = terms.size(), l = beta_shifted.size();
  std::vector<std::vector<std::int64_t>> moved(nt, std::vector<std::int64_t>(l + 1));
  for (std::size_t j = 0; j < nt; ++j) {
    for (std::size_t q = 0; q < l; ++q) {
      if (__builtin_add_overflow(beta_shifted[q], terms[j].exponent[q], &moved[j][q])) {
        throw std::overflow_error("linear form entry exceeds 64 bits");
      }
    }
    moved[j][l] = d;
  }

  std::vector<GroupChoice> out;
  std::vector<std::size_t> k(nt, 0);
  // compositions of m into nt parts, via recursion on the term index
  auto rec = [&](auto&& self, std::size_t j, std::size_t left, __int128 coeff, __int128 multinom) -> void {
    if (j + 1 == nt) {
      k[j] = left;
      __int128 c = coeff;
      for (std::size_t t = 0; t < left; ++t) c = checked_mul(c, terms[j].coeff);
      GroupChoice g{checked_mul(c, multinom), {}};
      g.blocks.reserve(m * (l + 1));
      for (std::size_t t = 0; t < nt; ++t) {
        for (std::size_t rep = 0; rep < k[t]; ++rep) g.blocks.insert(g.blocks.end(), moved[t].begin(), moved[t].end());
      }
      out.push_back(std::move(g));
      return;
    }
    __int128 c = coeff, mult = multinom;
    for (std::size_t take = 0; take <= left; ++take) {
      k[j] = take;
      self(self, j + 1, left - take, c, mult);
      if (take == left) break;
      c = checked_mul(c, terms[j].coeff);
      // binom(left, take+1) = binom(left, take) * (left - take) / (take + 1)
      mult = checked_mul(mult, static_cast<__int128>(left - take)) / static_cast<__int128>(take + 1);
    }
  };
  rec(rec, 0, m, 1, 1);
  return out;
}

}  // namespace detail

/// The row of S: f_S(n) = sum coeff * f_target(n-1) for n >= 1. Dead targets
/// go to `dead` when it is non-null.
inline EvolutionRow evolve(const DeadnessOracle& oracle, const State& s, std::vector<State>* dead = nullptr) {
  const ProductSpec& spec = oracle.spec();
  const std::size_t l = spec.order(), block = l + 1, r = s.arity();
  if (s.width() != l) throw std::invalid_argument("evolve: state width differs from sequence order");

  std::vector<std::vector<detail::GroupChoice>> groups;
  std::vector<std::int64_t> shifted(l);
  for (std::size_t i = 0; i < r;) {
    std::size_t j = i + 1;
    while (j < r && std::equal(s.factor(i).begin(), s.factor(i).end(), s.factor(j).begin())) ++j;
    shift_level(spec.seq().rec(), s.beta(i), shifted);
    groups.push_back(detail::expand_group(spec, shifted, s.offset(i), j - i));
    i = j;
  }

  std::unordered_map<State, __int128, StateHash> acc;
  std::vector<std::size_t> pick(groups.size(), 0);
  std::vector<std::int64_t> flat(r * block);
  while (true) {
    __int128 c = 1;
    std::size_t pos = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& ch = groups[g][pick[g]];
      c = detail::checked_mul(c, ch.coeff);
      std::copy(ch.blocks.begin(), ch.blocks.end(), flat.begin() + static_cast<std::ptrdiff_t>(pos));
      pos += ch.blocks.size();
    }
    if (c != 0) {
      auto [it, fresh] = acc.try_emplace(State::canonical(l, flat), c);
      if (!fresh) it->second = detail::checked_add(it->second, c);
    }
    std::size_t g = 0;
    while (g < groups.size() && ++pick[g] == groups[g].size()) pick[g++] = 0;
    if (g == groups.size()) break;
  }

  std::vector<std::pair<State, __int128>> sorted(acc.begin(), acc.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  EvolutionRow row;
  for (auto& [target, coeff] : sorted) {
    if (coeff == 0) continue;
    if (oracle.is_dead(target)) {
      if (dead) dead->push_back(std::move(target));
      continue;
    }
    row.push_back({to_bigint(coeff), std::move(target)});
  }
  return row;
}

inline EvolutionRow evolve(const ProductSpec& spec, const State& s) { return evolve(DeadnessOracle(spec), s); }

/// f_S(0) = sum_k prod_i p(k + d_i - <beta_i, F(0)>), p the coefficients of P.
inline BigInt initial_value(const ProductSpec& spec, const State& s) {
  const auto& init = spec.seq().init();
  const std::int64_t deg = spec.p().degree();
  const std::size_t r = s.arity();
  if (r == 0) return 0;
  std::vector<BigInt> off(r);
  for (std::size_t i = 0; i < r; ++i) off[i] = BigInt(s.offset(i)) - evaluate<BigInt>(s.beta(i), std::span<const BigInt>(init));
  // 0 <= k + off_i <= deg for every i
  BigInt lo = -off[0], hi = BigInt(deg) - off[0];
  for (std::size_t i = 1; i < r; ++i) {
    lo = std::max(lo, BigInt(-off[i]));
    hi = std::min(hi, BigInt(deg - off[i]));
  }
  BigInt sum = 0;
  for (BigInt k = lo; k <= hi; ++k) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < r && prod != 0; ++i) prod *= spec.p()[static_cast<std::size_t>((k + off[i]).convert_to<std::int64_t>())];
    sum += prod;
  }
  return sum;
}

}  // namespace sterngf
