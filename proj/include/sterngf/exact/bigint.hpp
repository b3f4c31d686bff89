#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace sterngf {

// Expression templates off: values behave like plain integers under auto.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Number of decimal digits of |x|; zero has one digit.
inline std::size_t decimal_digits(const BigInt& x) {
  if (x == 0) return 1;
  std::size_t n = mpz_sizeinbase(x.backend().data(), 10);
  // mpz_sizeinbase may overshoot by one
  BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(n - 1));
  return boost::multiprecision::abs(x) >= p ? n : n - 1;
}

inline bool fits_int64(const BigInt& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const BigRat& x) {
  if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
  return x.str();
}

inline std::string to_string(__int128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

inline BigInt to_bigint(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt r = (hi << 64) + BigInt(static_cast<std::uint64_t>(u));
  return neg ? BigInt(-r) : r;
}

/// Raw GMP handle, for the few hot loops that call mpz_* directly.
/// Requires |x| < 2^127.
inline __int128 to_int128(const BigInt& x) {
  BigInt a = boost::multiprecision::abs(x);
  auto lo = static_cast<unsigned __int128>(mpz_getlimbn(a.backend().data(), 0));
  auto hi = mpz_size(a.backend().data()) > 1 ? static_cast<unsigned __int128>(mpz_getlimbn(a.backend().data(), 1)) : 0;
  auto v = static_cast<__int128>((hi << 64) | lo);
  return x < 0 ? -v : v;
}

inline bool fits_int128(const BigInt& x) { return mpz_sizeinbase(x.backend().data(), 2) <= 126; }

inline mpz_ptr raw(BigInt& x) { return x.backend().data(); }
inline mpz_srcptr raw(const BigInt& x) { return x.backend().data(); }

}  // namespace sterngf
