#include "nilrep/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nilrep/catalog.hpp"

namespace nilrep {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& what) {
  if (!obj.is_object()) throw ParseError(what + " must be a JSON object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ParseError("unknown key '" + key + "' in " + what);
}

template <typename T>
T get(const json& obj, const char* key, const std::string& what) {
  if (!obj.contains(key)) throw ParseError("missing key '" + std::string(key) + "' in " + what);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError("bad value for '" + std::string(key) + "' in " + what + ": " + e.what());
  }
}

Scalar parse_scalar(const Field& field, const json& value) {
  if (!value.is_string()) throw ParseError("coefficients must be fraction strings");
  try {
    return Scalar::parse(field, value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json algebra_json(const LieAlgebra& g, bool with_names) {
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const SparseVector& v = g.structure(i, j);
      if (v.empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : v) terms.push_back(json::array({k + 1, c.to_string()}));
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", terms}});
    }
  json out = {{"dim", g.dim()}, {"field", g.field().to_string()}, {"brackets", brackets}};
  if (with_names && !g.names().empty()) out["names"] = g.names();
  return out;
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown_keys(doc, {"dim", "field", "brackets", "names"}, "algebra");
  const auto dim = get<std::size_t>(doc, "dim", "algebra");
  Field field;
  try {
    field = Field::parse(get<std::string>(doc, "field", "algebra"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  LieAlgebra g(field, dim);
  const json& brackets = doc.contains("brackets") ? doc.at("brackets") : json::array();
  if (!brackets.is_array()) throw ParseError("'brackets' must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : brackets) {
    reject_unknown_keys(entry, {"i", "j", "terms"}, "bracket entry");
    const auto i = get<std::size_t>(entry, "i", "bracket entry");
    const auto j = get<std::size_t>(entry, "j", "bracket entry");
    if (i < 1 || j > dim || i >= j) throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
    if (!seen.insert({i, j}).second) throw ParseError("duplicate bracket entry");
    const json& terms = entry.contains("terms") ? entry.at("terms") : json();
    if (!terms.is_array()) throw ParseError("'terms' must be an array");
    SparseVector v;
    for (const auto& term : terms) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned())
        throw ParseError("terms must be [k, \"coefficient\"] pairs");
      const auto k = term[0].get<std::size_t>();
      if (k < 1 || k > dim) throw ParseError("term index out of range");
      v.add(k - 1, parse_scalar(field, term[1]));
    }
    g.set_bracket(i - 1, j - 1, v);
  }
  if (doc.contains("names")) {
    const auto names = get<std::vector<std::string>>(doc, "names", "algebra");
    if (names.size() != dim) throw ParseError("'names' must list one name per basis vector");
    g.set_names(names);
  }
  return g;
}

std::string emit_algebra(const LieAlgebra& g) { return algebra_json(g, true).dump(2) + "\n"; }

std::string algebra_checksum(const LieAlgebra& g) {
  const std::string text = algebra_json(g, false).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string emit_representation(const Representation& rep) {
  json matrices = json::array();
  for (const auto& m : rep.matrices) {
    const Matrix dense = m.to_dense();
    json rows = json::array();
    for (std::size_t r = 0; r < dense.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < dense.cols(); ++c) row.push_back(dense(r, c).to_string());
      rows.push_back(std::move(row));
    }
    matrices.push_back(std::move(rows));
  }
  json out = {{"provenance", {{"algorithm", to_string(rep.provenance.algorithm)}, {"params", rep.provenance.params}}},
              {"algebra_checksum", algebra_checksum(rep.algebra)},
              {"field", rep.algebra.field().to_string()},
              {"module_dim", rep.module_dim},
              {"matrices", matrices}};
  return out.dump(1) + "\n";
}

Representation parse_representation(const std::string& text, const LieAlgebra& g) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown_keys(doc, {"provenance", "algebra_checksum", "field", "module_dim", "matrices"}, "representation");
  if (get<std::string>(doc, "algebra_checksum", "representation") != algebra_checksum(g))
    throw ParseError("representation was computed for a different algebra (checksum mismatch)");
  if (get<std::string>(doc, "field", "representation") != g.field().to_string())
    throw ParseError("representation field differs from the algebra field");
  Representation rep;
  rep.algebra = g;
  rep.module_dim = get<std::size_t>(doc, "module_dim", "representation");
  const json& prov = doc.contains("provenance") ? doc.at("provenance") : json::object();
  reject_unknown_keys(prov, {"algorithm", "params"}, "provenance");
  try {
    rep.provenance.algorithm = algorithm_from_string(get<std::string>(prov, "algorithm", "provenance"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (prov.contains("params")) rep.provenance.params = get<std::map<std::string, std::string>>(prov, "params", "provenance");
  const json& matrices = doc.contains("matrices") ? doc.at("matrices") : json();
  if (!matrices.is_array() || matrices.size() != g.dim())
    throw ParseError("representation must list one matrix per basis vector");
  const std::size_t n = rep.module_dim;
  for (const auto& m : matrices) {
    if (!m.is_array() || m.size() != n) throw ParseError("matrix has the wrong number of rows");
    SparseMatrix sm(g.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!m[r].is_array() || m[r].size() != n) throw ParseError("matrix row has the wrong length");
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar x = parse_scalar(g.field(), m[r][c]);
        if (!x.is_zero()) sm.set(r, c, x);
      }
    }
    rep.matrices.push_back(std::move(sm));
  }
  return rep;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

LieAlgebra load_algebra(const std::string& source, const Field& field) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    try {
      return catalog_algebra(source.substr(prefix.size()), field);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return parse_algebra(read_file(source));
}

}  // namespace nilrep
