#pragma once

#include "sterngf/exact/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sterngf {

/// A rational power series num(t)/den(t) in canonical form:
/// no common polynomial factor, the combined coefficients of num and den
/// have gcd 1, and den(0) > 0.
class RationalGF {
 public:
  RationalGF() : num_{}, den_{BigInt(1)} {}

  /// Normalizes. Throws std::domain_error if den is zero or the reduced
  /// fraction has a pole at t = 0.
  RationalGF(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

  std::string pretty(const std::string& var = "t") const {
    return "(" + to_pretty(num_, var) + ")/(" + to_pretty(den_, var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = ZPoly{BigInt(1)};
      return;
    }
    ZPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *exact_quotient(num_, g);
      den_ = *exact_quotient(den_, g);
    }
    if (den_.coeff(0) == 0) throw std::domain_error("rational function has a pole at t = 0");
    BigInt c = boost::multiprecision::gcd(content(num_), content(den_));
    if (den_[0] < 0) c = -c;
    if (c != 1) {
      std::vector<BigInt> n = num_.coeffs(), d = den_.coeffs();
      for (auto& x : n) x /= c;
      for (auto& x : d) x /= c;
      num_ = ZPoly(std::move(n));
      den_ = ZPoly(std::move(d));
    }
  }

  ZPoly num_;
  ZPoly den_;
};

/// First n Taylor coefficients of num/den, exact. Requires den(0) != 0.
inline std::vector<BigRat> series(const ZPoly& num, const ZPoly& den, std::size_t n) {
  if (den.is_zero() || den[0] == 0) throw std::domain_error("series: denominator vanishes at t = 0");
  std::vector<BigRat> out;
  out.reserve(n);
  BigRat d0(den[0]);
  for (std::size_t k = 0; k < n; ++k) {
    BigRat acc(num.coeff(k));
    std::size_t top = std::min<std::size_t>(k, den.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (den[j] != 0) acc -= BigRat(den[j]) * out[k - j];
    }
    out.push_back(acc / d0);
  }
  return out;
}

inline std::vector<BigRat> series(const RationalGF& gf, std::size_t n) { return series(gf.num(), gf.den(), n); }

/// Integer-valued fast path; requires den(0) == 1 or -1 after normalization.
inline std::vector<BigInt> integer_series(const RationalGF& gf, std::size_t n) {
  const ZPoly& den = gf.den();
  if (den[0] != 1) throw std::domain_error("integer_series: den(0) must be 1");
  std::vector<BigInt> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt acc = gf.num().coeff(k);
    std::size_t top = std::min<std::size_t>(k, den.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (den[j] != 0) acc -= den[j] * out[k - j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace sterngf
