#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liesc/decomposition.hpp"
#include "liesc/error.hpp"
#include "liesc/frattinian.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/linear.hpp"
#include "liesc/maximal.hpp"

namespace liesc::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "liesc-v1";

struct LoadOptions {
  std::uint32_t prime_cap = Domain::kDefaultPrimeCap;
};

// ---------------------------------------------------------------------------
// Text rendering

inline std::string basis_name(const LieAlgebra* L, std::size_t i) {
  if (L && !L->basis_names().empty()) return L->basis_names()[i];
  return "e" + std::to_string(i + 1);
}

/// "e1 + 2*e3"; "0" for the zero vector.
inline std::string format_vector(const Vector& v, const LieAlgebra* L = nullptr) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!v[i].is_one()) out += v[i].to_string() + "*";
    out += basis_name(L, i);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_subspace(const Subspace& s, const LieAlgebra* L = nullptr) {
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) out += (r ? ", " : "") + format_vector(s.basis().row(r), L);
  return out + "}";
}

// ---------------------------------------------------------------------------
// Domain and subspace records

inline json domain_to_json(const Domain& d) {
  if (d.is_prime()) return json{{"kind", "prime"}, {"p", d.modulus()}};
  return json{{"kind", "rational"}};
}

inline Domain domain_from_json(const json& j, const LoadOptions& opts = {}) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorCode::ParseError, "field must be an object with a string 'kind'");
  }
  const std::string kind = j["kind"];
  if (kind == "rational") return Domain::rational();
  if (kind != "prime") throw Error(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
  if (!j.contains("p") || !j["p"].is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, "prime field needs a positive integer 'p'");
  }
  const auto p = j["p"].get<std::uint64_t>();
  if (!is_prime_number(p)) throw Error(ErrorCode::ParseError, "p = " + std::to_string(p) + " is not prime");
  if (p > opts.prime_cap) {
    throw Error(ErrorCode::ParseError, "p = " + std::to_string(p) + " exceeds the configured cap " +
                                           std::to_string(opts.prime_cap));
  }
  return Domain::prime(p);
}

inline json vector_to_json(const Vector& v) {
  json row = json::array();
  for (const auto& s : v) row.push_back(s.to_string());
  return row;
}

inline json subspace_to_json(const Subspace& s, const LieAlgebra* L = nullptr) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(vector_to_json(s.basis().row(r)));
  json out{{"dim", s.dim()}, {"basis", std::move(rows)}};
  if (L && !L->basis_names().empty()) {
    json named = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) named.push_back(format_vector(s.basis().row(r), L));
    out["named"] = std::move(named);
  }
  return out;
}

inline Subspace subspace_from_json(const json& j, Domain domain, std::size_t ambient_dim) {
  const json& rows = j.is_object() ? j.at("basis") : j;
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, "subspace basis must be an array of rows");
  Matrix m(domain, 0, ambient_dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != ambient_dim) {
      throw Error(ErrorCode::ParseError, "subspace row must have " + std::to_string(ambient_dim) + " entries");
    }
    Vector v;
    for (const auto& entry : row) {
      if (!entry.is_string()) throw Error(ErrorCode::ParseError, "scalars are written as strings");
      v.push_back(Scalar::parse(domain, entry.get<std::string>()));
    }
    m.append_row(v);
  }
  return canonicalize(m);
}

inline json named_subspaces_to_json(const std::vector<NamedSubspace>& items, const LieAlgebra* L) {
  json out = json::array();
  for (const auto& [name, s] : items) {
    json rec = subspace_to_json(s, L);
    rec["name"] = name;
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra files

inline json algebra_to_json(const LieAlgebra& L) {
  json out{{"format", kFormatTag}, {"field", domain_to_json(L.domain())}, {"dim", L.dim()}};
  if (!L.basis_names().empty()) out["basis_names"] = L.basis_names();
  json brackets = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector& v = L.structure_constants().upper(i, j);
      if (is_zero(v)) continue;
      json terms = json::array();
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) terms.push_back(json{{"k", k + 1}, {"c", v[k].to_string()}});
      }
      brackets.push_back(json{{"i", i + 1}, {"j", j + 1}, {"terms", std::move(terms)}});
    }
  }
  out["brackets"] = std::move(brackets);
  return out;
}

inline LieAlgebra algebra_from_json(const json& j, const LoadOptions& opts = {}) {
  auto parse_error = [](const std::string& why) { return Error(ErrorCode::ParseError, why); };
  if (!j.is_object()) throw parse_error("algebra file must be a JSON object");
  if (!j.contains("format") || j["format"] != kFormatTag) throw parse_error("format must be \"liesc-v1\"");
  if (!j.contains("field")) throw parse_error("missing 'field'");
  const Domain domain = domain_from_json(j["field"], opts);
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw parse_error("'dim' must be a nonnegative integer");
  const auto n = j["dim"].get<std::size_t>();

  std::vector<std::string> names;
  if (j.contains("basis_names")) {
    if (!j["basis_names"].is_array()) throw parse_error("'basis_names' must be an array of strings");
    for (const auto& name : j["basis_names"]) {
      if (!name.is_string()) throw parse_error("'basis_names' must be an array of strings");
      names.push_back(name.get<std::string>());
    }
    if (names.size() != n) throw Error(ErrorCode::IndexOutOfRange, "basis_names length differs from dim");
  }

  StructureConstants sc(domain, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const json brackets = j.contains("brackets") ? j["brackets"] : json::array();
  if (!brackets.is_array()) throw parse_error("'brackets' must be an array");
  auto index = [&](const json& rec, const char* key) {
    if (!rec.contains(key) || !rec[key].is_number_integer()) throw parse_error(std::string("'") + key + "' must be an integer");
    const auto v = rec[key].get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(ErrorCode::IndexOutOfRange, std::string(key) + " = " + std::to_string(v) + " outside [1, " +
                                                  std::to_string(n) + "]");
    }
    return static_cast<std::size_t>(v - 1);
  };
  for (const auto& rec : brackets) {
    if (!rec.is_object()) throw parse_error("bracket entries must be objects");
    const std::size_t i = index(rec, "i");
    const std::size_t jj = index(rec, "j");
    if (i >= jj) throw parse_error("bracket entries need i < j");
    if (!seen.insert({i, jj}).second) {
      throw parse_error("pair (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ") appears twice");
    }
    if (!rec.contains("terms") || !rec["terms"].is_array()) throw parse_error("bracket entry needs a 'terms' array");
    Vector value = zero_vector(domain, n);
    std::set<std::size_t> ks;
    for (const auto& term : rec["terms"]) {
      if (!term.is_object()) throw parse_error("terms must be objects");
      const std::size_t k = index(term, "k");
      if (!ks.insert(k).second) throw parse_error("coefficient index k repeated in one bracket");
      if (!term.contains("c") || !term["c"].is_string()) throw Error(ErrorCode::InvalidScalar, "'c' must be a string");
      value[k] = Scalar::parse(domain, term["c"].get<std::string>());
    }
    sc.set(i, jj, std::move(value));
  }
  return LieAlgebra(std::move(sc), std::move(names));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LieAlgebra parse_algebra(const std::string& text, const LoadOptions& opts = {}) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return algebra_from_json(j, opts);
}

inline LieAlgebra load(const std::filesystem::path& path, const LoadOptions& opts = {}) {
  return parse_algebra(read_file(path), opts);
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << text;
}

inline void save(const LieAlgebra& L, const std::filesystem::path& path) {
  write_text(path, algebra_to_json(L).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Results

inline json obligations_to_json(const ObligationReport& r, const LieAlgebra* L) {
  json out = json::array();
  for (const auto& o : r.obligations) {
    json rec{{"name", o.name}, {"pass", o.pass}};
    if (!o.witnesses.empty()) rec["witness_subspaces"] = named_subspaces_to_json(o.witnesses, L);
    out.push_back(std::move(rec));
  }
  return out;
}

inline json verdict_to_json(const FrattinianVerdict& v, const LieAlgebra& L) {
  json out{{"is_frattinian", v.is_frattinian}, {"checked_count", v.checked_count}};
  out["witness"] = v.witness ? subspace_to_json(*v.witness, &L) : json(nullptr);
  if (v.witness) out["witness_center"] = subspace_to_json(subalgebra_centered(L, *v.witness), &L);
  return out;
}

inline json maximal_to_json(const MaximalEnumeration& e, const LieAlgebra& L, bool list) {
  json out{{"count", e.count()}};
  if (list) {
    json items = json::array();
    for (const auto& m : e.items) items.push_back(subspace_to_json(m, &L));
    out["items"] = std::move(items);
  }
  return out;
}

inline json certificate_to_json(const DecompositionCertificate& c, const LieAlgebra* L = nullptr) {
  json factors = json::array();
  for (const auto& f : c.factors) factors.push_back(subspace_to_json(f, L));
  json trace = json::array();
  for (const auto& s : c.trace) {
    trace.push_back(json{{"M", subspace_to_json(s.maximal, L)},
                         {"N", subspace_to_json(s.partner, L)},
                         {"E", subspace_to_json(s.factor, L)},
                         {"L_next", subspace_to_json(s.remainder, L)}});
  }
  json out{{"case", to_string(c.kind)}, {"center_dim", c.center_dim}, {"factors", std::move(factors)},
           {"trace", std::move(trace)}};
  if (!c.nested_factors.empty()) {
    json nested = json::array();
    for (const auto& f : c.nested_factors) nested.push_back(subspace_to_json(f, L));
    out["nested_factors"] = std::move(nested);
  }
  return out;
}

inline DecompositionCertificate certificate_from_json(const json& j, const LieAlgebra& L) {
  auto malformed = [](const std::string& why) { return Error(ErrorCode::MalformedCertificate, why); };
  if (!j.is_object() || !j.contains("case") || !j.contains("factors") || !j["factors"].is_array()) {
    throw malformed("certificate needs 'case' and 'factors'");
  }
  DecompositionCertificate c;
  const std::string kind = j["case"].is_string() ? j["case"].get<std::string>() : "";
  if (kind == "one") {
    c.kind = DecompositionCase::one;
  } else if (kind == "two") {
    c.kind = DecompositionCase::two;
  } else {
    throw malformed("case must be \"one\" or \"two\"");
  }
  c.center_dim = j.value("center_dim", std::size_t{0});
  try {
    for (const auto& f : j["factors"]) c.factors.push_back(subspace_from_json(f, L.domain(), L.dim()));
    if (j.contains("nested_factors")) {
      for (const auto& f : j["nested_factors"]) c.nested_factors.push_back(subspace_from_json(f, L.domain(), L.dim()));
    }
    if (j.contains("trace")) {
      for (const auto& s : j["trace"]) {
        c.trace.push_back({subspace_from_json(s.at("M"), L.domain(), L.dim()),
                           subspace_from_json(s.at("N"), L.domain(), L.dim()),
                           subspace_from_json(s.at("E"), L.domain(), L.dim()),
                           subspace_from_json(s.at("L_next"), L.domain(), L.dim())});
      }
    }
  } catch (const Error& e) {
    throw malformed(e.what());
  } catch (const json::exception& e) {
    throw malformed(e.what());
  }
  return c;
}

/// One record per check: {lemma_id, algebra_id, maximal_basis, pass, witness_subspaces}.
inline json lemma_checks_to_json(const LemmaSuiteReport& r, const LieAlgebra& L) {
  json out = json::array();
  for (const auto& c : r.checks) {
    out.push_back(json{{"lemma_id", to_string(c.lemma)},
                       {"algebra_id", c.algebra_id},
                       {"maximal_basis", c.maximal ? subspace_to_json(*c.maximal, &L)["basis"] : json(nullptr)},
                       {"pass", c.pass},
                       {"witness_subspaces", named_subspaces_to_json(c.witnesses, &L)}});
  }
  return out;
}

}  // namespace liesc::io
