#pragma once

// Spec files:
//   {
//     "P": [1],                                   ascending coefficients
//     "seq": {"init": [1, 2], "rec": [1, 1]},     f(0..L-1) and c_1..c_L
//     "factor": [{"c": 1, "e": [0, 0]}, ...],     sum_j c_j x^{<e_j, F(i)>}
//     "alpha": [2]                                optional
//   }
// Integers may also be written as decimal strings when they do not fit in
// 64 bits (P and init only). Errors carry the JSON pointer of the offending
// value.

#include "sterngf/core/product_spec.hpp"

#include "json.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sterngf {

struct SpecFile {
  ProductSpec spec;
  std::optional<TargetAlpha> alpha;

  friend bool operator==(const SpecFile& a, const SpecFile& b) { return a.spec == b.spec && a.alpha == b.alpha; }
};

namespace detail {

using json = nlohmann::json;

[[noreturn]] inline void spec_error(const std::string& where, const std::string& what) {
  throw InvalidSpecError((where.empty() ? std::string("/") : where) + ": " + what);
}

inline BigInt big_integer_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size() && ok; ++i) ok = s[i] >= '0' && s[i] <= '9';
    if (!ok) spec_error(where, "expected an integer, got the string \"" + s + "\"");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  spec_error(where, "expected an integer, got " + std::string(j.type_name()));
}

inline std::int64_t small_integer_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) spec_error(where, "expected an integer, got " + std::string(j.type_name()));
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    spec_error(where, "integer does not fit in 64 bits");
  }
  return j.get<std::int64_t>();
}

inline const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) spec_error(where, "expected an array, got " + std::string(j.type_name()));
  return j;
}

inline void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) spec_error(where, "expected an object, got " + std::string(j.type_name()));
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) spec_error(where + "/" + k, "unknown key");
  }
  for (const char* key : keys) {
    if (std::string(key) != "alpha" && !j.contains(key)) spec_error(where + "/" + key, "missing");
  }
}

inline json integer_json(const BigInt& x) {
  if (fits_int64(x)) return x.convert_to<std::int64_t>();
  return x.str();
}

}  // namespace detail

inline SpecFile parse_spec_file(const std::string& text) {
  using detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpecError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  detail::only_keys(j, "", {"P", "seq", "factor", "alpha"});

  std::vector<BigInt> p;
  const auto& pj = detail::array_at(j["P"], "/P");
  for (std::size_t i = 0; i < pj.size(); ++i) p.push_back(detail::big_integer_at(pj[i], "/P/" + std::to_string(i)));

  const auto& sj = j["seq"];
  detail::only_keys(sj, "/seq", {"init", "rec"});
  std::vector<BigInt> init;
  std::vector<std::int64_t> rec;
  const auto& ij = detail::array_at(sj["init"], "/seq/init");
  for (std::size_t i = 0; i < ij.size(); ++i) init.push_back(detail::big_integer_at(ij[i], "/seq/init/" + std::to_string(i)));
  const auto& rj = detail::array_at(sj["rec"], "/seq/rec");
  for (std::size_t i = 0; i < rj.size(); ++i) rec.push_back(detail::small_integer_at(rj[i], "/seq/rec/" + std::to_string(i)));
  if (rec.empty()) detail::spec_error("/seq/rec", "recurrence must have order >= 1");
  if (init.size() != rec.size()) {
    detail::spec_error("/seq/init", std::to_string(init.size()) + " initial values for a recurrence of order " +
                                        std::to_string(rec.size()));
  }
  if (rec.back() == 0) detail::spec_error("/seq/rec/" + std::to_string(rec.size() - 1), "last coefficient must be nonzero");

  std::vector<FactorTerm> terms;
  const auto& fj = detail::array_at(j["factor"], "/factor");
  for (std::size_t i = 0; i < fj.size(); ++i) {
    const std::string where = "/factor/" + std::to_string(i);
    detail::only_keys(fj[i], where, {"c", "e"});
    FactorTerm t;
    t.coeff = detail::small_integer_at(fj[i]["c"], where + "/c");
    const auto& ej = detail::array_at(fj[i]["e"], where + "/e");
    for (std::size_t k = 0; k < ej.size(); ++k) t.exponent.push_back(detail::small_integer_at(ej[k], where + "/e/" + std::to_string(k)));
    if (t.exponent.size() != rec.size()) {
      detail::spec_error(where + "/e", "expected " + std::to_string(rec.size()) + " entries, got " +
                                           std::to_string(t.exponent.size()));
    }
    terms.push_back(std::move(t));
  }

  std::optional<TargetAlpha> alpha;
  if (j.contains("alpha")) {
    const auto& aj = detail::array_at(j["alpha"], "/alpha");
    std::vector<unsigned> a;
    for (std::size_t i = 0; i < aj.size(); ++i) {
      std::int64_t x = detail::small_integer_at(aj[i], "/alpha/" + std::to_string(i));
      if (x < 0 || x > 1000) detail::spec_error("/alpha/" + std::to_string(i), "expected an integer in [0, 1000]");
      a.push_back(static_cast<unsigned>(x));
    }
    try {
      alpha.emplace(std::move(a));
    } catch (const InvalidSpecError& e) {
      detail::spec_error("/alpha", e.what());
    }
  }

  try {
    return SpecFile{ProductSpec(ZPoly(std::move(p)), CFiniteSeq(std::move(init), std::move(rec)), std::move(terms)),
                    std::move(alpha)};
  } catch (const InvalidSpecError& e) {
    const std::string msg = e.what();
    detail::spec_error(msg.rfind("factor term", 0) == 0 ? "/factor" : "/P", msg);
  } catch (const std::invalid_argument& e) {
    detail::spec_error("/seq", e.what());
  }
}

inline SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpecError("cannot read spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_file(ss.str());
}

inline std::string serialize_spec_file(const SpecFile& f) {
  using detail::json;
  json j = json::object();
  json p = json::array();
  // trailing zeros are dropped by ZPoly; write at least one entry
  if (f.spec.p().is_zero()) p.push_back(0);
  for (const auto& c : f.spec.p().coeffs()) p.push_back(detail::integer_json(c));
  j["P"] = p;
  json init = json::array();
  for (const auto& x : f.spec.seq().init()) init.push_back(detail::integer_json(x));
  j["seq"] = {{"init", init}, {"rec", f.spec.seq().rec()}};
  json factor = json::array();
  for (const auto& t : f.spec.terms()) factor.push_back({{"c", t.coeff}, {"e", t.exponent}});
  j["factor"] = factor;
  if (f.alpha) j["alpha"] = f.alpha->values();
  return j.dump();
}

}  // namespace sterngf
