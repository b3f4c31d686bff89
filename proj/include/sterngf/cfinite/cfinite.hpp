#pragma once

// C-finite sequences f(i) = c_1 f(i-1) + ... + c_L f(i-L) with integer
// coefficients and initial values f(0..L-1), and linear forms over the
// sliding basis (f(n), ..., f(n+L-1)).

#include "sterngf/exact/poly.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sterngf {

class CFiniteSeq {
 public:
  CFiniteSeq(std::vector<BigInt> init, std::vector<std::int64_t> rec) : init_(std::move(init)), rec_(std::move(rec)) {
    if (rec_.empty()) throw std::invalid_argument("C-finite sequence needs order >= 1");
    if (init_.size() != rec_.size()) {
      throw std::invalid_argument("C-finite sequence: " + std::to_string(init_.size()) + " initial values for order " +
                                  std::to_string(rec_.size()));
    }
    if (rec_.back() == 0) throw std::invalid_argument("C-finite sequence: last recurrence coefficient must be nonzero");
  }

  static CFiniteSeq from_ints(std::vector<std::int64_t> init, std::vector<std::int64_t> rec) {
    std::vector<BigInt> b(init.begin(), init.end());
    return CFiniteSeq(std::move(b), std::move(rec));
  }

  std::size_t order() const { return rec_.size(); }
  const std::vector<BigInt>& init() const { return init_; }
  const std::vector<std::int64_t>& rec() const { return rec_; }

  /// f(0), ..., f(count-1).
  std::vector<BigInt> terms(std::size_t count) const {
    std::vector<BigInt> out;
    out.reserve(count);
    const std::size_t l = order();
    for (std::size_t n = 0; n < count; ++n) {
      if (n < l) {
        out.push_back(init_[n]);
        continue;
      }
      BigInt acc = 0;
      for (std::size_t k = 1; k <= l; ++k) acc += out[n - k] * rec_[k - 1];
      out.push_back(std::move(acc));
    }
    return out;
  }

  BigInt term(std::size_t n) const { return terms(n + 1).back(); }

  friend bool operator==(const CFiniteSeq&, const CFiniteSeq&) = default;

 private:
  std::vector<BigInt> init_;
  std::vector<std::int64_t> rec_;
};

inline BigInt term(const CFiniteSeq& seq, std::size_t n) { return seq.term(n); }

/// Coefficient vector beta of <beta, (f(n), ..., f(n+L-1))>.
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(std::vector<std::int64_t> c) : c_(std::move(c)) {}

  std::size_t size() const { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::span<const std::int64_t> coeffs() const { return c_; }

  friend LinForm operator+(const LinForm& a, const LinForm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("LinForm length mismatch");
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (__builtin_add_overflow(a.c_[i], b.c_[i], &r[i])) throw std::overflow_error("LinForm overflow");
    }
    return LinForm(std::move(r));
  }
  friend LinForm operator-(const LinForm& a, const LinForm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("LinForm length mismatch");
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (__builtin_sub_overflow(a.c_[i], b.c_[i], &r[i])) throw std::overflow_error("LinForm overflow");
    }
    return LinForm(std::move(r));
  }
  friend bool operator==(const LinForm&, const LinForm&) = default;

 private:
  std::vector<std::int64_t> c_;
};

/// <beta, (f(n), ..., f(n+L-1))> given the window f(n..n+L-1).
template <class Int>
BigInt evaluate(std::span<const std::int64_t> beta, std::span<const Int> window) {
  BigInt acc = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (beta[j] != 0) acc += BigInt(window[j]) * beta[j];
  }
  return acc;
}

/// Rewrites a form at level n as the equal form at level n-1:
///   out_0 = beta_{L-1} c_L,  out_j = beta_{j-1} + beta_{L-1} c_{L-j}.
/// `out` may not alias `beta`.
inline void shift_level(std::span<const std::int64_t> rec, std::span<const std::int64_t> beta,
                        std::span<std::int64_t> out) {
  const std::size_t l = rec.size();
  const std::int64_t top = beta[l - 1];
  for (std::size_t j = 0; j < l; ++j) {
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(top, rec[l - 1 - j], &prod)) throw std::overflow_error("shift_level overflow");
    std::int64_t lower = j == 0 ? 0 : beta[j - 1];
    if (__builtin_add_overflow(lower, prod, &out[j])) throw std::overflow_error("shift_level overflow");
  }
}

inline LinForm shift_level(const CFiniteSeq& seq, const LinForm& beta) {
  if (beta.size() != seq.order()) throw std::invalid_argument("shift_level: form length differs from order");
  std::vector<std::int64_t> out(beta.size());
  shift_level(seq.rec(), beta.coeffs(), out);
  return LinForm(std::move(out));
}

/// f(n+J) as a form over (f(n), ..., f(n+L-1)); valid for all n >= 0.
inline LinForm reduce_shift(const CFiniteSeq& seq, std::size_t shift) {
  const std::size_t l = seq.order();
  std::vector<std::int64_t> e(l, 0);
  if (shift < l) {
    e[shift] = 1;
    return LinForm(std::move(e));
  }
  e[l - 1] = 1;
  LinForm cur(std::move(e));
  for (std::size_t j = l - 1; j < shift; ++j) cur = shift_level(seq, cur);
  return cur;
}

/// X^L - c_1 X^{L-1} - ... - c_L, ascending coefficients.
inline ZPoly indicial_poly(const CFiniteSeq& seq) {
  const std::size_t l = seq.order();
  std::vector<BigInt> c(l + 1);
  for (std::size_t k = 1; k <= l; ++k) c[l - k] = -BigInt(seq.rec()[k - 1]);
  c[l] = 1;
  return ZPoly(std::move(c));
}

/// The sequence with the given monic characteristic polynomial and initial values.
inline CFiniteSeq from_charpoly(const ZPoly& chi, std::vector<BigInt> init) {
  const std::size_t l = static_cast<std::size_t>(chi.degree());
  if (chi.degree() < 1 || chi.leading() != 1) throw std::invalid_argument("from_charpoly: need monic degree >= 1");
  std::vector<std::int64_t> rec(l);
  for (std::size_t k = 1; k <= l; ++k) {
    BigInt c = -chi[l - k];
    if (!fits_int64(c)) throw std::overflow_error("from_charpoly: coefficient exceeds 64 bits");
    rec[k - 1] = c.convert_to<std::int64_t>();
  }
  init.resize(l);
  return CFiniteSeq(std::move(init), std::move(rec));
}

/// n -> <beta, (f(n), ..., f(n+L-1))>; satisfies the same recurrence as f.
inline CFiniteSeq linear_form_sequence(const CFiniteSeq& seq, const LinForm& beta) {
  const std::size_t l = seq.order();
  if (beta.size() != l) throw std::invalid_argument("linear_form_sequence: form length differs from order");
  std::vector<BigInt> f = seq.terms(2 * l);
  std::vector<BigInt> init;
  for (std::size_t n = 0; n < l; ++n) {
    init.push_back(evaluate<BigInt>(beta.coeffs(), std::span<const BigInt>(f).subspan(n, l)));
  }
  return CFiniteSeq(std::move(init), seq.rec());
}

/// n -> h(n + shift).
inline CFiniteSeq shifted(const CFiniteSeq& h, std::size_t shift) {
  std::vector<BigInt> v = h.terms(shift + h.order());
  return CFiniteSeq(std::vector<BigInt>(v.begin() + static_cast<std::ptrdiff_t>(shift), v.end()), h.rec());
}

/// n -> sum_{i<n} h(i); characteristic polynomial gains a factor (X - 1).
inline CFiniteSeq partial_sums(const CFiniteSeq& h) {
  ZPoly chi = indicial_poly(h) * zpoly({-1, 1});
  std::vector<BigInt> v = h.terms(h.order() + 1);
  std::vector<BigInt> s{BigInt(0)};
  for (std::size_t i = 0; i < h.order(); ++i) s.push_back(s.back() + v[i]);
  return from_charpoly(chi, std::move(s));
}

/// a*g + b*h (+ constant) as one sequence; the recurrence is the product of
/// the characteristic polynomials, which is a valid (not minimal) annihilator.
inline CFiniteSeq combine(const BigInt& a, const CFiniteSeq& g, const BigInt& b, const CFiniteSeq& h,
                          const BigInt& constant = 0) {
  ZPoly chi = indicial_poly(g) * indicial_poly(h);
  if (constant != 0) chi = chi * zpoly({-1, 1});
  const std::size_t l = static_cast<std::size_t>(chi.degree());
  std::vector<BigInt> gv = g.terms(l), hv = h.terms(l), init(l);
  for (std::size_t i = 0; i < l; ++i) init[i] = a * gv[i] + b * hv[i] + constant;
  return from_charpoly(chi, std::move(init));
}

}  // namespace sterngf
