#pragma once

// Closure of the state space: starting from the root state, evolve every
// state once and add the unseen targets, until nothing new shows up. The
// result is the sparse integer system f(n) = M f(n-1), f(0) = v.

#include "sterngf/core/deadness.hpp"
#include "sterngf/core/evolve.hpp"
#include "sterngf/exact/modular.hpp"

#include <gmp.h>

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace sterngf {

/// Matrix coefficient: a machine word when it fits, else a big integer.
using Coefficient = std::variant<std::int64_t, BigInt>;

inline Coefficient make_coefficient(const BigInt& c) {
  if (fits_int64(c) && c != BigInt(std::numeric_limits<std::int64_t>::min())) return c.convert_to<std::int64_t>();
  return c;
}

inline BigInt to_bigint(const Coefficient& c) {
  if (const auto* w = std::get_if<std::int64_t>(&c)) return BigInt(*w);
  return std::get<BigInt>(c);
}

struct SparseEntry {
  std::size_t col;
  Coefficient coeff;
};

struct StateSystem {
  std::vector<State> states;                   // root first, BFS order
  std::vector<std::vector<SparseEntry>> rows;  // rows[s]: evolve(states[s]) by index
  std::vector<BigInt> v;                       // initial values
  std::size_t root = 0;

  std::size_t dim() const { return states.size(); }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
  }
};

struct ClosureOptions {
  std::size_t limit = 5000;
  std::size_t dead_horizon = default_dead_horizon();
};

struct ClosureReport {
  enum class Outcome { Closed, LimitExceeded };
  std::size_t state_count = 0;
  std::size_t dead_discarded_count = 0;  // distinct dead targets met
  std::size_t limit = 0;
  Outcome outcome = Outcome::Closed;
  std::vector<State> frontier_sample;  // up to five unprocessed states on abort
};

struct BuildResult {
  std::optional<StateSystem> system;  // present iff closed
  ClosureReport report;

  bool closed() const { return report.outcome == ClosureReport::Outcome::Closed; }
};

inline BuildResult build_system(const ProductSpec& spec, const TargetAlpha& alpha, const ClosureOptions& opts = {}) {
  DeadnessOracle oracle(spec, opts.dead_horizon);
  StateSystem sys;
  std::unordered_map<State, std::size_t, StateHash> index;
  std::unordered_set<State, StateHash> dead_seen;
  BuildResult result;
  result.report.limit = opts.limit;

  State root = root_state(alpha, spec.order());
  index.emplace(root, 0);
  sys.states.push_back(std::move(root));

  std::vector<State> dead;
  for (std::size_t cur = 0; cur < sys.states.size(); ++cur) {
    dead.clear();
    EvolutionRow row = evolve(oracle, sys.states[cur], &dead);
    for (auto& d : dead) dead_seen.insert(std::move(d));
    std::vector<SparseEntry> entries;
    entries.reserve(row.size());
    for (auto& term : row) {
      auto [it, fresh] = index.try_emplace(term.target, sys.states.size());
      if (fresh) sys.states.push_back(std::move(term.target));
      entries.push_back({it->second, make_coefficient(term.coeff)});
    }
    sys.rows.push_back(std::move(entries));
    if (sys.states.size() > opts.limit) {
      result.report.outcome = ClosureReport::Outcome::LimitExceeded;
      result.report.state_count = sys.states.size();
      result.report.dead_discarded_count = dead_seen.size();
      for (std::size_t i = cur + 1; i < sys.states.size() && result.report.frontier_sample.size() < 5; ++i) {
        result.report.frontier_sample.push_back(sys.states[i]);
      }
      return result;
    }
  }
  sys.v.reserve(sys.states.size());
  for (const auto& s : sys.states) sys.v.push_back(initial_value(spec, s));
  result.report.state_count = sys.states.size();
  result.report.dead_discarded_count = dead_seen.size();
  result.system = std::move(sys);
  return result;
}

/// (M^n v)[root] for n = 0..last.
inline std::vector<BigInt> stream_terms(const StateSystem& sys, std::size_t last) {
  const std::size_t n = sys.dim();
  std::vector<BigInt> x = sys.v, y(n);
  std::vector<BigInt> out{x[sys.root]};
  out.reserve(last + 1);
  for (std::size_t step = 1; step <= last; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      mpz_ptr acc = raw(y[i]);
      mpz_set_ui(acc, 0);
      for (const auto& e : sys.rows[i]) {
        mpz_srcptr xv = raw(x[e.col]);
        if (const auto* w = std::get_if<std::int64_t>(&e.coeff)) {
          if (*w >= 0) {
            mpz_addmul_ui(acc, xv, static_cast<unsigned long>(*w));
          } else {
            mpz_submul_ui(acc, xv, static_cast<unsigned long>(-*w));
          }
        } else {
          mpz_addmul(acc, xv, raw(std::get<BigInt>(e.coeff)));
        }
      }
    }
    std::swap(x, y);
    out.push_back(x[sys.root]);
  }
  return out;
}

/// stream_terms reduced modulo a prime.
inline std::vector<modular::u64> stream_terms_mod(const StateSystem& sys, std::size_t last, modular::u64 p) {
  const std::size_t n = sys.dim();
  std::vector<modular::u64> x(n), y(n);
  std::vector<std::vector<std::pair<std::size_t, modular::u64>>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = modular::reduce(sys.v[i], p);
    for (const auto& e : sys.rows[i]) rows[i].emplace_back(e.col, modular::reduce(to_bigint(e.coeff), p));
  }
  std::vector<modular::u64> out{x[sys.root]};
  out.reserve(last + 1);
  for (std::size_t step = 1; step <= last; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      unsigned __int128 acc = 0;
      for (const auto& [col, c] : rows[i]) {
        acc += static_cast<unsigned __int128>(c) * x[col];
        // products stay below 2^124 since p < 2^62; fold before the sum can wrap
        if (acc >> 124) acc %= p;
      }
      y[i] = static_cast<modular::u64>(acc % p);
    }
    std::swap(x, y);
    out.push_back(x[sys.root]);
  }
  return out;
}

}  // namespace sterngf
