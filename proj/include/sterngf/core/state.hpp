#pragma once

// A state is a multiset of r factors (d_i, beta_i) standing for
//   f_S(n) = sum_{k in Z} prod_i a(n, k + d_i - <beta_i, (f(n), ..., f(n+L-1))>).
// Canonical form: the componentwise minimum of the beta_i is zero and the
// factors are sorted by (beta lexicographic, d). Both steps preserve the
// value (the first is a shift of k, the second commutativity).

#include "sterngf/core/product_spec.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace sterngf {

class State {
 public:
  State() = default;

  std::size_t width() const { return width_; }
  std::size_t arity() const { return width_ + 1 == 0 ? 0 : data_.size() / (width_ + 1); }

  std::int64_t offset(std::size_t i) const { return data_[i * (width_ + 1) + width_]; }
  std::span<const std::int64_t> beta(std::size_t i) const {
    return std::span<const std::int64_t>(data_).subspan(i * (width_ + 1), width_);
  }
  /// Factor i as the block (beta_0, ..., beta_{L-1}, d).
  std::span<const std::int64_t> factor(std::size_t i) const {
    return std::span<const std::int64_t>(data_).subspan(i * (width_ + 1), width_ + 1);
  }
  std::span<const std::int64_t> data() const { return data_; }

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
    for (std::int64_t x : data_) {
      std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(x);
      z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
      h = z ^ (z >> 31U);
    }
    return static_cast<std::size_t>(h);
  }

  /// e.g. "[(0;0,0),(1;0,2)]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < arity(); ++i) {
      if (i) s += ",";
      s += "(" + std::to_string(offset(i)) + ";";
      for (std::size_t j = 0; j < width_; ++j) s += (j ? "," : "") + std::to_string(beta(i)[j]);
      s += ")";
    }
    return s + "]";
  }

  /// Builds a state from blocks (beta..., d) laid out contiguously, putting
  /// it into canonical form.
  static State canonical(std::size_t width, std::span<const std::int64_t> raw);

  bool is_canonical() const {
    for (std::size_t i = 1; i < arity(); ++i) {
      auto a = factor(i - 1), b = factor(i);
      if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
    for (std::size_t j = 0; j < width_; ++j) {
      std::int64_t m = beta(0)[j];
      for (std::size_t i = 1; i < arity(); ++i) m = std::min(m, beta(i)[j]);
      if (m != 0) return false;
    }
    return true;
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::int64_t> data_;
};

struct StateHash {
  std::size_t operator()(const State& s) const { return s.hash(); }
};

inline State State::canonical(std::size_t width, std::span<const std::int64_t> raw) {
  const std::size_t block = width + 1;
  const std::size_t r = raw.size() / block;
  State out;
  out.width_ = width;
  out.data_.assign(raw.begin(), raw.end());
  if (r == 0) return out;
  for (std::size_t j = 0; j < width; ++j) {
    std::int64_t m = out.data_[j];
    for (std::size_t i = 1; i < r; ++i) m = std::min(m, out.data_[i * block + j]);
    if (m == 0) continue;
    for (std::size_t i = 0; i < r; ++i) out.data_[i * block + j] -= m;
  }
  // insertion sort on blocks; r is small
  std::vector<std::int64_t> tmp(block);
  for (std::size_t i = 1; i < r; ++i) {
    std::size_t k = i;
    auto less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(out.data_.begin() + static_cast<std::ptrdiff_t>(a * block),
                                          out.data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * block),
                                          out.data_.begin() + static_cast<std::ptrdiff_t>(b * block),
                                          out.data_.begin() + static_cast<std::ptrdiff_t>((b + 1) * block));
    };
    while (k > 0 && less(k, k - 1)) {
      std::swap_ranges(out.data_.begin() + static_cast<std::ptrdiff_t>(k * block),
                       out.data_.begin() + static_cast<std::ptrdiff_t>((k + 1) * block),
                       out.data_.begin() + static_cast<std::ptrdiff_t>((k - 1) * block));
      --k;
    }
  }
  return out;
}

struct RawFactor {
  std::int64_t offset = 0;
  std::vector<std::int64_t> beta;
};

/// Canonical form of an arbitrary list of (d, beta) pairs.
inline State canonicalize(std::span<const RawFactor> raw) {
  if (raw.empty()) return {};
  const std::size_t width = raw.front().beta.size();
  std::vector<std::int64_t> flat;
  flat.reserve(raw.size() * (width + 1));
  for (const auto& f : raw) {
    if (f.beta.size() != width) throw std::invalid_argument("canonicalize: mixed form lengths");
    flat.insert(flat.end(), f.beta.begin(), f.beta.end());
    flat.push_back(f.offset);
  }
  return State::canonical(width, flat);
}

inline State canonicalize(const std::vector<RawFactor>& raw) { return canonicalize(std::span<const RawFactor>(raw)); }

/// Offsets 0..m-1 with multiplicities alpha_i, all forms zero. Its value is u_alpha(n).
inline State root_state(const TargetAlpha& alpha, std::size_t width) {
  std::vector<RawFactor> raw;
  for (std::int64_t d : alpha.offsets()) raw.push_back({d, std::vector<std::int64_t>(width, 0)});
  return canonicalize(raw);
}

}  // namespace sterngf
