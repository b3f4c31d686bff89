#pragma once

// Property checks shared by the GoogleTest suite and the acceptance runner.
// Each check returns a list of human-readable failures; empty means pass.
// State values are recomputed here straight from the expanded rows of F_n,
// independent of state_oracle.

#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace props {

using namespace sterngf;

struct Case {
  std::string name;
  ProductSpec spec;
  std::vector<unsigned> alpha;
};

inline std::vector<Case> corpus() {
  using namespace fixtures;
  std::vector<Case> out;
  for (auto a : std::vector<std::vector<unsigned>>{{1}, {2}, {3}, {5}, {10}, {1, 1}, {2, 1}, {1, 0, 1}, {1, 1, 1, 1, 1}}) {
    out.push_back({"stern", stern(), a});
  }
  out.push_back({"stern P=1+x", stern(zpoly({1, 1})), {2}});
  out.push_back({"stern P=2-x^2", stern(zpoly({2, 0, -1})), {1, 1}});
  for (auto a : std::vector<std::vector<unsigned>>{{2}, {1, 1}, {3}}) out.push_back({"fibonacci", fibonacci(), a});
  out.push_back({"tribonacci", tribonacci(), {2}});
  return out;
}

inline std::string label(const Case& c) {
  std::string s = c.name + " alpha=[";
  for (std::size_t i = 0; i < c.alpha.size(); ++i) s += (i ? "," : "") + std::to_string(c.alpha[i]);
  return s + "]";
}

/// Rows of F_0..F_max and the vectors F(n) = (f(n), ..., f(n+L-1)).
class Table {
 public:
  Table(const ProductSpec& spec, std::size_t max_n) {
    const auto f = spec.seq().terms(max_n + spec.order() + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
      rows_.push_back(expand_Fn(spec, n));
      fvec_.emplace_back(f.begin() + static_cast<std::ptrdiff_t>(n),
                         f.begin() + static_cast<std::ptrdiff_t>(n + spec.order()));
    }
  }

  std::size_t max_n() const { return rows_.size() - 1; }

  /// sum_k prod_i a(n, k + d_i - <beta_i, F(n)>) over any list of factors
  BigInt value(std::span<const RawFactor> factors, std::size_t n) const {
    const auto& row = rows_[n];
    std::vector<BigInt> shift;
    for (const auto& f : factors) {
      BigInt x = f.offset;
      for (std::size_t j = 0; j < f.beta.size(); ++j) x -= BigInt(f.beta[j]) * fvec_[n][j];
      shift.push_back(x);
    }
    // k ranges over indices where every factor is in [0, deg]
    const BigInt deg = static_cast<long long>(row.size()) - 1;
    BigInt lo = -*std::min_element(shift.begin(), shift.end());
    BigInt hi = deg - *std::max_element(shift.begin(), shift.end());
    BigInt total = 0;
    for (BigInt k = lo; k <= hi; ++k) {
      BigInt prod = 1;
      for (const auto& sh : shift) {
        prod *= row[(k + sh).convert_to<std::size_t>()];
        if (prod == 0) break;
      }
      total += prod;
    }
    return total;
  }

  BigInt value(const State& s, std::size_t n) const {
    std::vector<RawFactor> fs;
    for (std::size_t i = 0; i < s.arity(); ++i) fs.push_back({s.offset(i), {s.beta(i).begin(), s.beta(i).end()}});
    return value(fs, n);
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::vector<BigInt>> fvec_;
};

inline StateSystem closed_system(const Case& c, std::size_t limit = 5000) {
  auto r = build_system(c.spec, TargetAlpha(c.alpha), {limit});
  if (!r.closed()) throw std::runtime_error(label(c) + ": closure did not terminate");
  return std::move(*r.system);
}

/// f_S(n) = sum_T M[S][T] f_T(n-1) and f_S(0) = v[S] for every closure state.
inline std::vector<std::string> evolution_soundness(const Case& c, std::size_t max_n = 8) {
  std::vector<std::string> fails;
  const auto sys = closed_system(c);
  const Table tab(c.spec, max_n);
  std::vector<BigInt> prev(sys.dim()), cur(sys.dim());
  for (std::size_t i = 0; i < sys.dim(); ++i) {
    prev[i] = tab.value(sys.states[i], 0);
    if (prev[i] != sys.v[i]) fails.push_back(label(c) + " v mismatch at " + sys.states[i].to_string());
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t i = 0; i < sys.dim(); ++i) {
      cur[i] = tab.value(sys.states[i], n);
      BigInt rhs = 0;
      for (const auto& e : sys.rows[i]) rhs += to_bigint(e.coeff) * prev[e.col];
      if (rhs != cur[i]) {
        fails.push_back(label(c) + " n=" + std::to_string(n) + " state " + sys.states[i].to_string() + ": " +
                        to_string(cur[i]) + " != " + to_string(rhs));
      }
    }
    std::swap(prev, cur);
  }
  return fails;
}

/// Evolution identity for random states, including the dead targets it drops.
inline std::vector<std::string> evolution_soundness_random(const ProductSpec& spec, const std::string& name,
                                                           std::uint64_t seed, int trials, std::size_t max_n = 6) {
  std::vector<std::string> fails;
  const Table tab(spec, max_n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> beta(0, 2), off(-3, 3), arity(1, 3);
  for (int t = 0; t < trials; ++t) {
    std::vector<RawFactor> raw(static_cast<std::size_t>(arity(rng)));
    for (auto& f : raw) {
      f.offset = off(rng);
      f.beta.resize(spec.order());
      for (auto& b : f.beta) b = beta(rng);
    }
    const State s = canonicalize(raw);
    const EvolutionRow row = evolve(spec, s);
    for (std::size_t n = 1; n <= max_n; ++n) {
      BigInt rhs = 0;
      for (const auto& term : row) rhs += term.coeff * tab.value(term.target, n - 1);
      if (rhs != tab.value(s, n)) fails.push_back(name + " random state " + s.to_string() + " n=" + std::to_string(n));
    }
  }
  return fails;
}

/// Idempotence, permutation invariance, invariance under adding gamma to
/// every beta, and value preservation.
inline std::vector<std::string> canonicalization(const ProductSpec& spec, const std::string& name, std::uint64_t seed,
                                                 int trials) {
  std::vector<std::string> fails;
  const Table tab(spec, 5);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> beta(-3, 3), off(-4, 4), arity(1, 4);
  for (int t = 0; t < trials; ++t) {
    std::vector<RawFactor> raw(static_cast<std::size_t>(arity(rng)));
    for (auto& f : raw) {
      f.offset = off(rng);
      f.beta.resize(spec.order());
      for (auto& b : f.beta) b = beta(rng);
    }
    const State s = canonicalize(raw);
    const std::string where = name + " " + s.to_string();
    if (!s.is_canonical()) fails.push_back(where + ": not canonical");
    if (State::canonical(s.width(), s.data()) != s) fails.push_back(where + ": not idempotent");

    auto perm = raw;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (canonicalize(perm) != s) fails.push_back(where + ": permutation changes the form");

    auto shifted = raw;
    std::vector<std::int64_t> gamma(spec.order());
    for (auto& g : gamma) g = beta(rng);
    for (auto& f : shifted) {
      for (std::size_t j = 0; j < gamma.size(); ++j) f.beta[j] += gamma[j];
    }
    if (canonicalize(shifted) != s) fails.push_back(where + ": beta shift changes the form");

    for (std::size_t n = 0; n <= tab.max_n(); ++n) {
      const BigInt raw_value = tab.value(shifted, n);
      if (raw_value != tab.value(s, n)) fails.push_back(where + ": value changes at n=" + std::to_string(n));
    }
  }
  return fails;
}

/// Every dead target met during closure is zero for n <= max_n.
inline std::vector<std::string> deadness_soundness(const Case& c, std::size_t max_n = 12) {
  std::vector<std::string> fails;
  const auto sys = closed_system(c);
  const Table tab(c.spec, max_n);
  DeadnessOracle oracle(c.spec);
  std::map<State, bool> dead;
  std::vector<State> buf;
  for (const auto& s : sys.states) {
    buf.clear();
    evolve(oracle, s, &buf);
    for (auto& d : buf) dead.emplace(std::move(d), true);
  }
  for (const auto& [d, _] : dead) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      if (tab.value(d, n) != 0) {
        fails.push_back(label(c) + " dead state " + d.to_string() + " is nonzero at n=" + std::to_string(n));
        break;
      }
    }
  }
  return fails;
}

/// Both solvers return the same canonical generating function.
inline std::vector<std::string> eliminate_vs_fit(const Case& c) {
  const auto sys = closed_system(c);
  if (sys.dim() > kEliminateMaxDim) return {};
  if (solve_by_elimination(sys) != solve_by_fitting(sys)) return {label(c) + ": eliminate and fit disagree"};
  return {};
}

/// Series of the generating function, matrix powers and brute force agree.
inline std::vector<std::string> oracle_agreement(const Case& c, std::size_t max_n = 8) {
  const auto sys = closed_system(c);
  const auto series = integer_series(solve_gf(sys), max_n + 1);
  const auto streamed = stream_terms(sys, max_n);
  const auto brute = u_alpha_terms(c.spec, TargetAlpha(c.alpha), max_n);
  std::vector<std::string> fails;
  if (series != brute) fails.push_back(label(c) + ": generating function series differs from brute force");
  if (streamed != brute) fails.push_back(label(c) + ": matrix powers differ from brute force");
  return fails;
}

/// fit_recurrence recovers random rational functions from just enough terms.
inline std::vector<std::string> fit_round_trip(std::uint64_t seed, int trials) {
  std::vector<std::string> fails;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-7, 7), deg(0, 5);
  const std::size_t guard = kDefaultGuard;
  for (int t = 0; t < trials; ++t) {
    std::vector<BigInt> nc, dc;
    for (int i = 0, k = deg(rng); i <= k; ++i) nc.emplace_back(coef(rng));
    for (int i = 0, k = 1 + deg(rng); i <= k; ++i) dc.emplace_back(coef(rng));
    dc[0] = 1;
    RationalGF g{ZPoly(nc), ZPoly(dc)};
    const auto order = static_cast<std::size_t>(std::max(g.den().degree(), g.num().degree() + 1));
    auto back = fit_recurrence(integer_series(g, 2 * order + 1 + guard), order, guard);
    if (!back || *back != g) fails.push_back("fit round trip failed for " + g.pretty());
  }
  return fails;
}

}  // namespace props
