#pragma once

// Root component of (I - tM)^{-1} v as a rational function.
//
// eliminate: by Cramer's rule it equals det(A_v) / det(A) with A = I - tM and
// A_v the same matrix with the root column replaced by v. Both determinants
// are polynomials of degree <= dim, obtained exactly from their values at
// dim+1 points modulo enough 62-bit primes to cover a coefficient bound.
//
// fit: the denominator divides det(I - tM), so the sequence satisfies a
// recurrence of order <= dim and 2*dim + 9 streamed terms pin it down.

#include "sterngf/closure/system.hpp"
#include "sterngf/core/oracle.hpp"
#include "sterngf/exact/fit.hpp"
#include "sterngf/exact/modular.hpp"
#include "sterngf/exact/rational_gf.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sterngf {

enum class SolveMethod { Auto, Eliminate, Fit };

inline constexpr std::size_t kEliminateMaxDim = 64;
inline constexpr std::size_t kSystemFitGuard = 8;

inline std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Eliminate: return "eliminate";
    case SolveMethod::Fit: return "fit";
    default: return "auto";
  }
}

inline SolveMethod resolve_method(const StateSystem& sys, SolveMethod m) {
  if (m != SolveMethod::Auto) return m;
  return sys.dim() <= kEliminateMaxDim ? SolveMethod::Eliminate : SolveMethod::Fit;
}

namespace detail {

using modular::u64;

inline u64 det_mod(std::vector<u64> a, std::size_t n, u64 p) {
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
      det = det == 0 ? 0 : p - det;
    }
    det = modular::mul(det, a[c * n + c], p);
    const u64 inv = modular::inv(a[c * n + c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const u64 f = modular::mul(a[r * n + c], inv, p);
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) {
        a[r * n + k] = modular::sub(a[r * n + k], modular::mul(f, a[c * n + k], p), p);
      }
    }
  }
  return det;
}

/// Coefficients of the polynomial of degree < xs.size() through (xs[i], ys[i]).
inline std::vector<u64> interpolate_mod(const std::vector<u64>& xs, std::vector<u64> ys, u64 p) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = modular::mul(modular::sub(ys[i], ys[i - 1], p), modular::inv(modular::sub(xs[i], xs[i - j], p), p), p);
      if (i == j) break;
    }
  }
  // Horner on the Newton form
  std::vector<u64> poly(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    // poly = poly * (t - xs[i]) + ys[i]
    for (std::size_t k = n - 1; k > 0; --k) {
      poly[k] = modular::sub(poly[k - 1], modular::mul(poly[k], xs[i], p), p);
    }
    poly[0] = modular::sub(ys[i], modular::mul(poly[0], xs[i], p), p);
  }
  return poly;
}

/// log2 of prod_i rowsum_i, each rowsum an l1 bound for one matrix row.
inline double log2_product(const std::vector<BigInt>& rowsums) {
  double s = 0;
  for (const auto& r : rowsums) {
    if (r > 0) s += static_cast<double>(mpz_sizeinbase(raw(r), 2));
  }
  return s;
}

}  // namespace detail

inline RationalGF solve_by_elimination(const StateSystem& sys) {
  using modular::u64;
  const std::size_t n = sys.dim(), root = sys.root;
  // Sum of |coefficients| of det is at most the product of row l1 norms.
  std::vector<BigInt> den_rows(n), num_rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt all = 0, off_root = 0;
    for (const auto& e : sys.rows[i]) {
      BigInt a = boost::multiprecision::abs(to_bigint(e.coeff));
      all += a;
      if (e.col != root) off_root += a;
    }
    den_rows[i] = 1 + all;
    num_rows[i] = boost::multiprecision::abs(sys.v[i]) + (i != root ? 1 : 0) + off_root;
  }
  const double bits = std::max(detail::log2_product(den_rows), detail::log2_product(num_rows)) + 2;
  const std::size_t primes = static_cast<std::size_t>(std::ceil(bits / 61.0)) + 1;

  std::vector<modular::CrtAccumulator> crt_num(n + 1), crt_den(n + 1);
  std::vector<u64> a(n * n), xs(n + 1), yd(n + 1), yn(n + 1);
  for (std::size_t pi = 0; pi < primes; ++pi) {
    const u64 p = modular::prime(pi);
    std::vector<std::vector<std::pair<std::size_t, u64>>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : sys.rows[i]) m[i].emplace_back(e.col, modular::reduce(to_bigint(e.coeff), p));
    }
    std::vector<u64> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = modular::reduce(sys.v[i], p);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 t = k + 1;
      xs[k] = t;
      std::fill(a.begin(), a.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = 1;
        for (const auto& [col, c] : m[i]) a[i * n + col] = modular::sub(a[i * n + col], modular::mul(t, c, p), p);
      }
      yd[k] = detail::det_mod(a, n, p);
      for (std::size_t i = 0; i < n; ++i) a[i * n + root] = v[i];
      yn[k] = detail::det_mod(a, n, p);
    }
    auto pd = detail::interpolate_mod(xs, yd, p), pn = detail::interpolate_mod(xs, yn, p);
    for (std::size_t k = 0; k <= n; ++k) {
      crt_den[k].add(pd[k], p);
      crt_num[k].add(pn[k], p);
    }
  }
  std::vector<BigInt> num(n + 1), den(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    num[k] = crt_num[k].symmetric();
    den[k] = crt_den[k].symmetric();
  }
  return RationalGF(ZPoly(std::move(num)), ZPoly(std::move(den)));
}

inline RationalGF solve_by_fitting(const StateSystem& sys) {
  const std::size_t d = sys.dim();
  auto terms = stream_terms(sys, 2 * d + kSystemFitGuard);
  auto gf = fit_recurrence(terms, d, kSystemFitGuard);
  if (!gf) throw std::logic_error("no recurrence of order <= dim fits the streamed terms");
  return *gf;
}

inline RationalGF solve_gf(const StateSystem& sys, SolveMethod method = SolveMethod::Auto) {
  if (resolve_method(sys, method) == SolveMethod::Eliminate) return solve_by_elimination(sys);
  return solve_by_fitting(sys);
}

/// Fit on brute-force terms u_alpha(0..last); nullopt when no generating
/// function with recurrence order <= max_order reproduces them.
inline std::optional<RationalGF> guess_gf(const ProductSpec& spec, const TargetAlpha& alpha, std::size_t last,
                                          std::size_t max_order, std::size_t guard = kDefaultGuard,
                                          std::size_t max_coefficients = kDefaultMaxCoefficients) {
  return fit_recurrence(u_alpha_terms(spec, alpha, last, max_coefficients), max_order, guard);
}

/// Largest order fit_recurrence can decide from last+1 terms.
inline std::size_t max_feasible_order(std::size_t last, std::size_t guard = kDefaultGuard) {
  return last + 1 < 1 + guard ? 0 : (last - guard) / 2;
}

}  // namespace sterngf
