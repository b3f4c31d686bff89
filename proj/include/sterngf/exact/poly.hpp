#pragma once

// Dense univariate polynomials, coefficients ascending, never with a
// trailing zero. Works over BigInt, BigRat and builtin integers.

#include "sterngf/exact/bigint.hpp"
#include "sterngf/exact/modular.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sterngf {

template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& leading() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Remainder modulo t^n.
  Poly truncated(std::size_t n) const {
    if (n >= c_.size()) return *this;
    return Poly(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<BigRat>;

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
  return a * b;
}

template <class Int>
ZPoly zpoly(std::initializer_list<Int> c) {
  std::vector<BigInt> v;
  for (Int x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

template <class Int>
ZPoly zpoly(const std::vector<Int>& c) {
  std::vector<BigInt> v;
  for (const Int& x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

inline QPoly to_rational(const ZPoly& p) {
  std::vector<BigRat> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

/// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> r = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Poly<T>{}, a};
  std::vector<T> q(static_cast<std::size_t>(dq) + 1, T(0));
  for (int k = dq; k >= 0; --k) {
    T f = r[static_cast<std::size_t>(k + db)] / b.leading();
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

inline BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

/// p / content(p), with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> v = p.coeffs();
  for (auto& c : v) c /= g;
  return ZPoly(std::move(v));
}

/// Exact quotient a / b over Z; nullopt if b does not divide a.
inline std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return ZPoly{};
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return std::nullopt;
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(dq) + 1);
  for (int k = dq; k >= 0; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (top % b.leading() != 0) return std::nullopt;
    BigInt f = top / b.leading();
    if (f != 0) {
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(k)] = std::move(f);
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  return ZPoly(std::move(q));
}

namespace detail {

inline std::vector<modular::u64> reduce_poly(const ZPoly& p, modular::u64 m) {
  std::vector<modular::u64> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(modular::reduce(c, m));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Degree of gcd(a, b) over Z/p; inputs trimmed.
inline int gcd_degree_mod(std::vector<modular::u64> a, std::vector<modular::u64> b, modular::u64 p) {
  using namespace modular;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 inv_lead = inv(b.back(), p);
    while (a.size() >= b.size()) {
      u64 f = mul(a.back(), inv_lead, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(f, b[j], p), p);
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace detail

/// Primitive gcd over Z[t] (content dropped, positive leading coefficient).
/// gcd(0, 0) is 0.
inline ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  // A single good prime that sees coprime images proves coprimality over Q.
  for (std::size_t i = 0; i < 3; ++i) {
    modular::u64 p = modular::prime(i);
    if (modular::reduce(a0.leading(), p) == 0 || modular::reduce(b0.leading(), p) == 0) continue;
    if (detail::gcd_degree_mod(detail::reduce_poly(a0, p), detail::reduce_poly(b0, p), p) == 0) {
      return ZPoly{BigInt(1)};
    }
    break;
  }
  ZPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    ZPoly r = a;
    const BigInt& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      BigInt lr = r.leading();
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      r = r * lb - ZPoly::monomial(lr, shift) * b;
      r = primitive_part(r);
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

/// Human-readable rendering, e.g. "1 - 5*t + 2*t^2".
template <class T>
std::string to_pretty(const Poly<T>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const T& c = p[i];
    if (c == 0) continue;
    bool neg = c < 0;
    T mag = neg ? T(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (!unit) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace sterngf
