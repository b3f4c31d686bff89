#pragma once

#include "sterngf/sterngf.hpp"

#include <initializer_list>
#include <vector>

namespace fixtures {

using namespace sterngf;

inline std::vector<FactorTerm> unit_terms(std::size_t l) {
  std::vector<FactorTerm> t{{1, std::vector<std::int64_t>(l, 0)}};
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<std::int64_t> e(l, 0);
    e[j] = 1;
    t.push_back({1, e});
  }
  return t;
}

/// prod_i (1 + x^{2^i} + x^{2^{i+1}}) times P.
inline ProductSpec stern(ZPoly p = zpoly({1})) {
  return ProductSpec(std::move(p), CFiniteSeq::from_ints({1}, {2}), {{1, {0}}, {1, {1}}, {1, {2}}});
}

/// prod_i (1 + x^{F_{i+2}} + x^{F_{i+3}}).
inline ProductSpec fibonacci() { return ProductSpec(zpoly({1}), CFiniteSeq::from_ints({1, 2}, {1, 1}), unit_terms(2)); }

/// k-bonacci exponents starting 1, 2, 4, ..., 2^{k-1}.
inline ProductSpec k_bonacci(std::size_t k) {
  std::vector<std::int64_t> init, rec(k, 1);
  for (std::size_t i = 0; i < k; ++i) init.push_back(std::int64_t{1} << i);
  return ProductSpec(zpoly({1}), CFiniteSeq::from_ints(init, rec), unit_terms(k));
}

inline ProductSpec tribonacci() { return k_bonacci(3); }

/// prod_i (1 + x^{2^i+1} + x^{2^{i+1}+1}).
inline ProductSpec challenge() {
  return ProductSpec(zpoly({1}), CFiniteSeq::from_ints({2, 3}, {3, -2}), unit_terms(2));
}

/// prod_i (1 + x^{2^i+1} + x^{3*2^i+2}).
inline ProductSpec challenge_table() {
  return ProductSpec(zpoly({1}), CFiniteSeq::from_ints({2, 3}, {3, -2}), {{1, {0, 0}}, {1, {1, 0}}, {1, {1, 1}}});
}

inline RationalGF gf(std::initializer_list<long long> num, std::initializer_list<long long> den) {
  std::vector<std::int64_t> n(num.begin(), num.end()), d(den.begin(), den.end());
  return RationalGF(zpoly(n), zpoly(d));
}

inline std::vector<BigInt> bigs(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

inline State make_state(std::initializer_list<RawFactor> fs) { return canonicalize(std::vector<RawFactor>(fs)); }

}  // namespace fixtures
