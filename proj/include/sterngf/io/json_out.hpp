#pragma once

// JSON emitters for command output. Integers of any size are written as
// plain JSON number literals.

#include "sterngf/cfinite/pv.hpp"
#include "sterngf/closure/solve.hpp"
#include "sterngf/closure/system.hpp"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace sterngf::json_out {

inline std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string integers(const std::vector<BigInt>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].str();
  }
  return out + "]";
}

inline std::string integers(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

inline std::string poly(const ZPoly& p) {
  if (p.is_zero()) return "[0]";
  return integers(p.coeffs());
}

/// {"num":[...],"den":[...], extra fields...}
inline std::string gf(const RationalGF& g, const std::vector<std::pair<std::string, std::string>>& extra, bool pretty) {
  std::string out = "{\"num\":" + poly(g.num()) + ",\"den\":" + poly(g.den());
  for (const auto& [k, v] : extra) out += "," + quote(k) + ":" + v;
  if (pretty) out += ",\"pretty\":" + quote(g.pretty());
  return out + "}";
}

inline std::string matrix(const StateSystem& sys) {
  std::string out = "{\"dim\":" + std::to_string(sys.dim()) + ",\"rows\":[";
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t k = 0; k < sys.rows[i].size(); ++k) {
      if (k) out += ",";
      const auto& e = sys.rows[i][k];
      out += "[" + std::to_string(e.col) + "," + to_bigint(e.coeff).str() + "]";
    }
    out += "]";
  }
  out += "],\"v\":" + integers(sys.v) + ",\"root\":" + std::to_string(sys.root) + "}";
  return out;
}

inline std::string report(const ClosureReport& r) {
  std::string out = "{\"outcome\":";
  out += r.outcome == ClosureReport::Outcome::Closed ? "\"Closed\"" : "\"LimitExceeded\"";
  out += ",\"state_count\":" + std::to_string(r.state_count);
  out += ",\"dead_discarded_count\":" + std::to_string(r.dead_discarded_count);
  out += ",\"limit\":" + std::to_string(r.limit);
  out += ",\"frontier_sample\":[";
  for (std::size_t i = 0; i < r.frontier_sample.size(); ++i) {
    if (i) out += ",";
    out += quote(r.frontier_sample[i].to_string());
  }
  return out + "]}";
}

inline std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string pv(const PvVerdict& v) {
  std::string out = "{\"pv\":";
  switch (v.kind) {
    case PvVerdict::Kind::Pv: out += "true"; break;
    case PvVerdict::Kind::NotPv: out += "false"; break;
    default: out += "\"undecided\""; break;
  }
  out += ",\"reason\":" + quote(v.reason) + ",\"margin\":" + number(v.margin) + ",\"roots\":[";
  for (std::size_t i = 0; i < v.roots.size(); ++i) {
    if (i) out += ",";
    out += "{\"re\":" + number(v.roots[i].real()) + ",\"im\":" + number(v.roots[i].imag()) +
           ",\"abs\":" + number(std::abs(v.roots[i])) + "}";
  }
  return out + "]}";
}

}  // namespace sterngf::json_out
