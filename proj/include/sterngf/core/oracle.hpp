#pragma once

// Brute-force evaluation straight from the product: coefficients of F_n(x),
// state values, and u_alpha(n). Used as independent checks of the evolution
// machinery.
//
// Memory: F_n has deg P + sum_{i<n} max_j <e_j, F(i)> + 1 coefficients,
// which grows like the n-th power of the dominant root of the sequence.
// Rows are stored as 64-bit words while ||P||_1 (sum |c_j|)^n < 2^62 and
// as big integers otherwise; anything above max_coefficients entries is
// refused with ResourceLimitError.

#include "sterngf/core/product_spec.hpp"
#include "sterngf/core/state.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace sterngf {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxCoefficients = std::size_t{1} << 26;

namespace detail {

/// <e_j, F(level)> for each term, as indices.
inline std::vector<std::size_t> level_exponents(const ProductSpec& spec, const std::vector<BigInt>& f, std::size_t level) {
  std::vector<std::size_t> out;
  std::span<const BigInt> w(f.data() + level, spec.order());
  for (const auto& t : spec.terms()) {
    BigInt v = evaluate<BigInt>(t.exponent, w);
    if (v > BigInt(std::numeric_limits<std::int64_t>::max())) throw ResourceLimitError("exponent exceeds 64 bits");
    out.push_back(v.convert_to<std::size_t>());
  }
  return out;
}

/// ||P||_1 * (sum_j |c_j|)^n, a bound on every |a(n,k)| and on sum_k |a(n,k)|.
inline BigInt coefficient_bound(const ProductSpec& spec, std::size_t n) {
  BigInt p1 = 0, s = 0;
  for (const auto& c : spec.p().coeffs()) p1 += boost::multiprecision::abs(c);
  for (const auto& t : spec.terms()) s += t.coeff < 0 ? -BigInt(t.coeff) : BigInt(t.coeff);
  return p1 * boost::multiprecision::pow(s, static_cast<unsigned>(n));
}

/// Multiplies the row by sum_j c_j x^{m_j} in place.
template <class Int>
void multiply_factor(std::vector<Int>& row, const ProductSpec& spec, const std::vector<std::size_t>& m,
                     std::size_t max_coefficients) {
  std::size_t top = 0;
  for (auto x : m) top = std::max(top, x);
  const std::size_t old = row.size();
  if (old + top > max_coefficients) {
    throw ResourceLimitError("F_n needs " + std::to_string(old + top) + " coefficients, limit is " +
                             std::to_string(max_coefficients));
  }
  row.resize(old + top, Int(0));
  const auto& terms = spec.terms();
  for (std::size_t k = row.size(); k-- > 0;) {
    Int v = 0;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (k >= m[j] && k - m[j] < old) v += row[k - m[j]] * Int(terms[j].coeff);
    }
    row[k] = std::move(v);
  }
}

template <class Int>
std::vector<Int> expand_rows(const ProductSpec& spec, std::size_t n, const std::vector<BigInt>& f,
                             std::size_t max_coefficients) {
  std::vector<Int> row;
  for (const auto& c : spec.p().coeffs()) {
    if constexpr (std::is_same_v<Int, BigInt>) {
      row.push_back(c);
    } else {
      row.push_back(c.template convert_to<Int>());
    }
  }
  std::vector<std::vector<std::size_t>> m;
  std::size_t total = row.size();
  for (std::size_t i = 0; i < n; ++i) {
    m.push_back(level_exponents(spec, f, i));
    total += *std::max_element(m.back().begin(), m.back().end());
    if (total > max_coefficients) {
      throw ResourceLimitError("F_" + std::to_string(n) + " needs more than " + std::to_string(max_coefficients) +
                               " coefficients");
    }
  }
  row.reserve(total);
  for (std::size_t i = 0; i < n; ++i) multiply_factor(row, spec, m[i], max_coefficients);
  return row;
}

inline bool small_rows(const ProductSpec& spec, std::size_t n) {
  return coefficient_bound(spec, n) < BigInt(1) << 62;
}

}  // namespace detail

/// a(n, 0..deg F_n); trailing entries may be zero after cancellation.
inline std::vector<BigInt> expand_Fn(const ProductSpec& spec, std::size_t n,
                                     std::size_t max_coefficients = kDefaultMaxCoefficients) {
  const auto f = spec.seq().terms(n + spec.order());
  if (detail::small_rows(spec, n)) {
    auto row = detail::expand_rows<std::int64_t>(spec, n, f, max_coefficients);
    return std::vector<BigInt>(row.begin(), row.end());
  }
  return detail::expand_rows<BigInt>(spec, n, f, max_coefficients);
}

/// f_S(n) evaluated directly from F_n.
inline BigInt state_oracle(const ProductSpec& spec, const State& s, std::size_t n,
                           std::size_t max_coefficients = kDefaultMaxCoefficients) {
  if (s.arity() == 0) return 0;
  const auto row = expand_Fn(spec, n, max_coefficients);
  const auto f = spec.seq().terms(n + spec.order());
  std::span<const BigInt> w(f.data() + n, spec.order());
  const BigInt deg = BigInt(row.size()) - 1;
  std::vector<BigInt> off(s.arity());
  BigInt lo, hi;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    off[i] = BigInt(s.offset(i)) - evaluate<BigInt>(s.beta(i), w);
    BigInt a = -off[i], b = deg - off[i];
    lo = i == 0 ? a : std::max(lo, a);
    hi = i == 0 ? b : std::min(hi, b);
  }
  BigInt sum = 0;
  for (BigInt k = lo; k <= hi; ++k) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < s.arity() && prod != 0; ++i) {
      prod *= row[(k + off[i]).convert_to<std::size_t>()];
    }
    sum += prod;
  }
  return sum;
}

namespace detail {

/// Streams row n from row n-1 and accumulates the correlation sum.
template <class Row, class Acc>
Acc correlate_next_row(const std::vector<Row>& prev, const ProductSpec& spec, const std::vector<std::size_t>& m,
                       const TargetAlpha& alpha) {
  std::size_t top = 0;
  for (auto x : m) top = std::max(top, x);
  const std::size_t len = prev.size() + top;
  const std::size_t span = alpha.span();
  const auto& a = alpha.values();
  const auto& terms = spec.terms();
  std::vector<Acc> ring(span, Acc(0));
  Acc sum = 0;
  for (std::size_t k = 0; k < len; ++k) {
    Acc v = 0;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (k >= m[j] && k - m[j] < prev.size()) v += Acc(prev[k - m[j]]) * Acc(terms[j].coeff);
    }
    ring[k % span] = v;
    if (k + 1 < span) continue;
    const std::size_t k0 = k + 1 - span;
    Acc prod = 1;
    for (std::size_t i = 0; i < span && prod != 0; ++i) {
      const Acc& x = ring[(k0 + i) % span];
      for (unsigned e = 0; e < a[i]; ++e) prod *= x;
    }
    sum += prod;
  }
  return sum;
}

template <class Row, class Acc>
Acc correlate_row(const std::vector<Row>& row, const TargetAlpha& alpha) {
  const std::size_t span = alpha.span();
  Acc sum = 0;
  for (std::size_t k0 = 0; k0 + span <= row.size(); ++k0) {
    Acc prod = 1;
    for (std::size_t i = 0; i < span; ++i) {
      for (unsigned e = 0; e < alpha.values()[i]; ++e) prod *= Acc(row[k0 + i]);
    }
    sum += prod;
  }
  return sum;
}

}  // namespace detail

/// u_alpha(n) = sum_k prod_i a(n, k+i)^{alpha_i}. Only row n-1 is held in
/// memory; row n is streamed.
inline BigInt u_alpha_oracle(const ProductSpec& spec, const TargetAlpha& alpha, std::size_t n,
                             std::size_t max_coefficients = kDefaultMaxCoefficients) {
  if (n == 0) return detail::correlate_row<BigInt, BigInt>(spec.p().coeffs(), alpha);
  const auto f = spec.seq().terms(n + spec.order());
  const auto m = detail::level_exponents(spec, f, n - 1);
  // sum_k prod <= max|a|^(r-1) * sum|a| <= bound^r
  const bool wide_acc =
      boost::multiprecision::pow(detail::coefficient_bound(spec, n), static_cast<unsigned>(alpha.arity())) <
      BigInt(1) << 125;
  if (detail::small_rows(spec, n)) {
    auto prev = detail::expand_rows<std::int64_t>(spec, n - 1, f, max_coefficients);
    if (wide_acc) return to_bigint(detail::correlate_next_row<std::int64_t, __int128>(prev, spec, m, alpha));
    return detail::correlate_next_row<std::int64_t, BigInt>(prev, spec, m, alpha);
  }
  auto prev = detail::expand_rows<BigInt>(spec, n - 1, f, max_coefficients);
  return detail::correlate_next_row<BigInt, BigInt>(prev, spec, m, alpha);
}

namespace detail {

template <class Row, class Acc>
std::vector<BigInt> u_alpha_terms_impl(const ProductSpec& spec, const TargetAlpha& alpha, std::size_t last,
                                       const std::vector<BigInt>& f, std::size_t max_coefficients) {
  auto to_big = [](const Acc& x) {
    if constexpr (std::is_same_v<Acc, BigInt>) {
      return x;
    } else {
      return to_bigint(x);
    }
  };
  std::vector<BigInt> out;
  std::vector<Row> row = expand_rows<Row>(spec, 0, f, max_coefficients);
  std::size_t total = row.size();
  for (std::size_t n = 0; n + 1 < last; ++n) {
    const auto m = level_exponents(spec, f, n);
    total += *std::max_element(m.begin(), m.end());
  }
  if (total <= max_coefficients) row.reserve(total);
  out.push_back(to_big(correlate_row<Row, Acc>(row, alpha)));
  for (std::size_t n = 1; n <= last; ++n) {
    const auto m = level_exponents(spec, f, n - 1);
    if (n == last) {
      out.push_back(to_big(correlate_next_row<Row, Acc>(row, spec, m, alpha)));
    } else {
      multiply_factor(row, spec, m, max_coefficients);
      out.push_back(to_big(correlate_row<Row, Acc>(row, alpha)));
    }
  }
  return out;
}

}  // namespace detail

/// u_alpha(0), ..., u_alpha(last) in one pass; peak memory is row last-1.
inline std::vector<BigInt> u_alpha_terms(const ProductSpec& spec, const TargetAlpha& alpha, std::size_t last,
                                         std::size_t max_coefficients = kDefaultMaxCoefficients) {
  const auto f = spec.seq().terms(last + spec.order());
  const bool wide_acc =
      boost::multiprecision::pow(detail::coefficient_bound(spec, last), static_cast<unsigned>(alpha.arity())) <
      BigInt(1) << 125;
  if (detail::small_rows(spec, last)) {
    if (wide_acc) return detail::u_alpha_terms_impl<std::int64_t, __int128>(spec, alpha, last, f, max_coefficients);
    return detail::u_alpha_terms_impl<std::int64_t, BigInt>(spec, alpha, last, f, max_coefficients);
  }
  return detail::u_alpha_terms_impl<BigInt, BigInt>(spec, alpha, last, f, max_coefficients);
}

}  // namespace sterngf
