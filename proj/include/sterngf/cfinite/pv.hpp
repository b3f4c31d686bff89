#pragma once

// Pisot-Vijayaraghavan classification of a C-finite recurrence: the
// indicial polynomial must have a real root > 1 and every other root
// strictly inside the unit circle. Roots exactly on the unit circle are
// caught exactly (cyclotomic divisors); the rest is numeric with a margin.

#include "sterngf/cfinite/cfinite.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace sterngf {

inline constexpr double kDefaultPvMargin = 1e-9;

struct PvVerdict {
  enum class Kind { Pv, NotPv, Undecided };
  Kind kind = Kind::Undecided;
  std::string reason;
  double margin = kDefaultPvMargin;
  std::vector<std::complex<double>> roots;  // sorted by decreasing modulus
};

/// Phi_n, built from X^n - 1 = prod_{d | n} Phi_d.
inline ZPoly cyclotomic(unsigned n) {
  ZPoly p = ZPoly::monomial(BigInt(1), n) - ZPoly{BigInt(1)};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = *exact_quotient(p, cyclotomic(d));
  }
  return p;
}

/// Roots of an integer polynomial via the companion matrix, polished by Newton steps.
inline std::vector<std::complex<double>> numeric_roots(const ZPoly& p) {
  const int deg = p.degree();
  std::vector<std::complex<double>> out;
  if (deg < 1) return out;
  std::vector<long double> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i].convert_to<long double>() / p.leading().convert_to<long double>();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (int i = 0; i < deg; ++i) {
    std::complex<long double> z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    for (int it = 0; it < 20; ++it) {
      std::complex<long double> f = 0, df = 0;
      for (int k = deg; k >= 0; --k) {
        df = df * z + f;
        f = f * z + c[static_cast<std::size_t>(k)];
      }
      if (std::abs(df) == 0) break;
      std::complex<long double> step = f / df;
      z -= step;
      if (std::abs(step) < 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  return out;
}

inline PvVerdict pv_classify(const CFiniteSeq& seq, double margin = kDefaultPvMargin) {
  using Kind = PvVerdict::Kind;
  PvVerdict v;
  v.margin = margin;
  const ZPoly chi = indicial_poly(seq);
  v.roots = numeric_roots(chi);
  const unsigned l = static_cast<unsigned>(seq.order());

  // Phi_n has degree phi(n) >= sqrt(n/2), so n <= 2 L^2 covers every candidate.
  for (unsigned n = 1; n <= 2 * l * l + 2; ++n) {
    ZPoly phi = cyclotomic(n);
    if (phi.degree() > static_cast<int>(l)) continue;
    if (exact_quotient(chi, phi)) {
      v.kind = Kind::NotPv;
      v.reason = "root of modulus 1 (divisible by cyclotomic polynomial Phi_" + std::to_string(n) + ")";
      return v;
    }
  }

  const auto& dom = v.roots.front();
  const double dom_abs = std::abs(dom);
  if (std::abs(dom_abs - 1.0) <= margin) {
    v.kind = Kind::Undecided;
    v.reason = "dominant root within margin of the unit circle";
    return v;
  }
  if (std::abs(dom.imag()) > margin || dom.real() <= 1.0) {
    v.kind = Kind::NotPv;
    v.reason = "no real dominant root greater than 1";
    return v;
  }
  bool undecided = false;
  for (std::size_t i = 1; i < v.roots.size(); ++i) {
    const double a = std::abs(v.roots[i]);
    if (a > 1.0 + margin) {
      v.kind = Kind::NotPv;
      v.reason = "a conjugate root lies outside the unit circle";
      return v;
    }
    if (a >= 1.0 - margin) undecided = true;
  }
  if (undecided) {
    v.kind = Kind::Undecided;
    v.reason = "a conjugate root is within margin of the unit circle";
    return v;
  }
  v.kind = Kind::Pv;
  v.reason = "dominant real root " + std::to_string(dom.real()) + ", all other roots inside the unit circle";
  return v;
}

}  // namespace sterngf
