#include "plie/io.hpp"

#include <algorithm>
#include <map>

namespace plie::io {

namespace {

std::string child(const std::string& pointer, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

void expect_object(const Json& j, const std::string& pointer, std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {},
                   std::initializer_list<std::string_view> extra = {}) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  for (auto key : required)
    if (!j.contains(std::string(key))) throw SchemaError(child(pointer, key), "missing required field");
  for (const auto& [key, value] : j.items()) {
    auto known = [&](std::initializer_list<std::string_view> keys) {
      return std::find(keys.begin(), keys.end(), key) != keys.end();
    };
    if (!known(required) && !known(optional) && !known(extra)) throw SchemaError(child(pointer, key), "unknown field");
  }
}

const Json& expect_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array");
  return j;
}

std::size_t index_from_json(const Json& j, const std::string& pointer, std::size_t bound) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw SchemaError(pointer, "index " + std::to_string(v) + " out of range (dim " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::size_t size_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(pointer, "expected a non-negative integer");
  return j.get<std::size_t>();
}

// Basis name or decimal index.
std::size_t basis_key(const std::string& key, const std::vector<std::string>& names, const std::string& pointer) {
  auto it = std::find(names.begin(), names.end(), key);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  if (!key.empty() && std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto v = std::stoull(key);
    if (v < names.size()) return static_cast<std::size_t>(v);
  }
  throw SchemaError(pointer, "unknown basis element \"" + key + "\"");
}

std::vector<std::string> names_from_json(const Json& j, std::size_t dim) {
  std::vector<std::string> names;
  if (!j.contains("basis")) {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    return names;
  }
  const auto& b = expect_array(j["basis"], "/basis");
  if (b.size() != dim) throw SchemaError("/basis", "has " + std::to_string(b.size()) + " names, dim is " + std::to_string(dim));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_string()) throw SchemaError(child("/basis", i), "expected a string");
    names.push_back(b[i].get<std::string>());
    if (std::find(names.begin(), names.end() - 1, names.back()) != names.end() - 1)
      throw SchemaError(child("/basis", i), "duplicate basis name");
  }
  return names;
}

Vec coeffs_from_json(const Json& j, const std::string& pointer, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  if (j.is_array()) return vec_from_json(j, pointer, n);
  if (!j.is_object()) throw SchemaError(pointer, "expected an object or an array");
  Vec v = zero_vec(n);
  for (const auto& [key, value] : j.items()) v[basis_key(key, names, child(pointer, key))] += rat_from_json(value, child(pointer, key));
  return v;
}

Json coeffs_to_json(const Vec& v, const std::vector<std::string>& names) {
  Json out = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) out[names[k]] = rat_to_json(v[k]);
  return out;
}

} // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

Json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Rat rat_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const InputError& e) {
      throw SchemaError(pointer, e.what());
    }
  }
  throw SchemaError(pointer, "expected an integer or a \"p/q\" string");
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

Vec vec_from_json(const Json& j, const std::string& pointer, std::size_t dim) {
  expect_array(j, pointer);
  if (j.size() != dim) throw SchemaError(pointer, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rat_from_json(j[i], child(pointer, i)));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
  return out;
}

Mat mat_from_json(const Json& j, const std::string& pointer, std::size_t rows, std::size_t cols) {
  expect_array(j, pointer);
  if (j.size() != rows) throw SchemaError(pointer, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  std::vector<Vec> rs;
  for (std::size_t r = 0; r < rows; ++r) rs.push_back(vec_from_json(j[r], child(pointer, r), cols));
  return Mat::from_rows(cols, rs);
}

Json subspace_to_json(const Subspace& s) { return mat_to_json(s.basis()); }

Subspace subspace_from_json(const Json& j, const std::string& pointer, std::size_t dim) {
  expect_array(j, pointer);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < j.size(); ++r) rows.push_back(vec_from_json(j[r], child(pointer, r), dim));
  return Subspace::span(dim, rows);
}

Json algebra_to_json(const LieAlgebra& g) {
  Json out;
  out["dim"] = g.dim();
  out["basis"] = g.basis_names();
  Json br = Json::array();
  for (const auto& e : g.nonzero_brackets()) br.push_back({{"i", e.i}, {"j", e.j}, {"coeffs", coeffs_to_json(e.coeffs, g.basis_names())}});
  out["brackets"] = br;
  return out;
}

LieAlgebra algebra_from_json(const Json& j, std::initializer_list<std::string_view> extra) {
  expect_object(j, "", {"dim", "brackets"}, {"basis"}, extra);
  const std::size_t n = size_from_json(j["dim"], "/dim");
  auto names = names_from_json(j, n);
  const auto& br = expect_array(j["brackets"], "/brackets");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  std::vector<BracketEntry> entries;
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::string p = child("/brackets", e);
    expect_object(br[e], p, {"i", "j", "coeffs"});
    std::size_t i = index_from_json(br[e]["i"], child(p, "i"), n);
    std::size_t k = index_from_json(br[e]["j"], child(p, "j"), n);
    Vec c = coeffs_from_json(br[e]["coeffs"], child(p, "coeffs"), names);
    if (i == k) {
      if (!is_zero(c)) throw SchemaError(p, "nonzero self-bracket");
      continue;
    }
    if (i > k) {
      std::swap(i, k);
      c = scale(Rat(-1), c);
    }
    if (auto [it, fresh] = seen.emplace(std::make_pair(i, k), e); !fresh)
      throw SchemaError(p, "pair (" + std::to_string(i) + "," + std::to_string(k) + ") already given at " +
                               child("/brackets", it->second));
    entries.push_back({i, k, std::move(c)});
  }
  return LieAlgebra(std::move(names), entries);
}

Json bialgebra_to_json(const LieBialgebra& b) {
  Json out = algebra_to_json(b.g);
  const std::size_t n = b.dim();
  Json delta = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(b.delta[i])) continue;
    Json wedge = Json::array();
    for (std::size_t w = 0; w < b.delta[i].size(); ++w)
      if (sgn(b.delta[i][w]) != 0) {
        auto [j, k] = wedge2_pair(n, w);
        wedge.push_back({j, k, rat_to_json(b.delta[i][w])});
      }
    delta.push_back({{"i", i}, {"wedge", wedge}});
  }
  out["delta"] = delta;
  return out;
}

LieBialgebra bialgebra_from_json(const Json& j, std::initializer_list<std::string_view> extra) {
  if (!j.is_object() || !j.contains("delta")) throw SchemaError("/delta", "missing required field");
  Json body = j;
  body.erase("delta");
  LieBialgebra b{algebra_from_json(body, extra), {}};
  const std::size_t n = b.dim();
  b.delta.assign(n, zero_vec(wedge2_dim(n)));
  const auto& d = expect_array(j["delta"], "/delta");
  std::vector<bool> seen(n, false);
  for (std::size_t e = 0; e < d.size(); ++e) {
    const std::string p = child("/delta", e);
    expect_object(d[e], p, {"i", "wedge"});
    const std::size_t i = index_from_json(d[e]["i"], child(p, "i"), n);
    if (seen[i]) throw SchemaError(child(p, "i"), "delta of element " + std::to_string(i) + " given twice");
    seen[i] = true;
    const auto& w = expect_array(d[e]["wedge"], child(p, "wedge"));
    for (std::size_t t = 0; t < w.size(); ++t) {
      const std::string q = child(child(p, "wedge"), t);
      if (!w[t].is_array() || w[t].size() != 3) throw SchemaError(q, "expected [j, k, coeff]");
      std::size_t a = index_from_json(w[t][0], child(q, 0), n);
      std::size_t c = index_from_json(w[t][1], child(q, 1), n);
      Rat v = rat_from_json(w[t][2], child(q, 2));
      if (a == c) throw SchemaError(q, "e_j ^ e_j is zero; use distinct indices");
      if (a > c) {
        std::swap(a, c);
        v = -v;
      }
      b.delta[i][wedge2_index(n, a, c)] += v;
    }
  }
  return b;
}

Json point_data_to_json(const PointActionData& d) {
  Json out;
  out["g_dim"] = d.g_dim();
  out["p_dim"] = d.p_dim();
  out["sigma"] = mat_to_json(d.sigma());
  out["pi_sharp"] = mat_to_json(d.pi_sharp());
  return out;
}

PointActionData point_data_from_json(const Json& j) {
  expect_object(j, "", {"g_dim", "p_dim", "sigma", "pi_sharp"});
  const std::size_t g = size_from_json(j["g_dim"], "/g_dim");
  const std::size_t p = size_from_json(j["p_dim"], "/p_dim");
  Mat sigma = mat_from_json(j["sigma"], "/sigma", p, g);
  Mat pi = mat_from_json(j["pi_sharp"], "/pi_sharp", p, p);
  try {
    return PointActionData(std::move(sigma), std::move(pi));
  } catch (const InputError& e) {
    throw SchemaError("/pi_sharp", e.what());
  }
}

ParsedInput parse_algebra_json(std::string_view text) {
  const Json j = parse_text(text);
  if (j.is_object() && j.contains("g_dim")) return point_data_from_json(j);
  if (j.is_object() && j.contains("delta")) return bialgebra_from_json(j);
  return algebra_from_json(j);
}

Json matched_to_json(const MatchedPair& mp) {
  Json out;
  out["l"] = algebra_to_json(mp.l);
  out["h"] = subspace_to_json(mp.h);
  out["n"] = subspace_to_json(mp.n);
  Json a = Json::array(), b = Json::array();
  for (const auto& m : mp.act_h_on_n) a.push_back(mat_to_json(m));
  for (const auto& m : mp.act_n_on_h) b.push_back(mat_to_json(m));
  out["act_h_on_n"] = a;
  out["act_n_on_h"] = b;
  return out;
}

MatchedPair matched_from_json(const Json& j) {
  expect_object(j, "", {"l", "h", "n", "act_h_on_n", "act_n_on_h"});
  LieAlgebra l;
  try {
    l = algebra_from_json(j["l"]);
  } catch (const SchemaError& e) {
    throw SchemaError("/l" + e.pointer(), e.what());
  }
  const auto h = subspace_from_json(j["h"], "/h", l.dim());
  const auto n = subspace_from_json(j["n"], "/n", l.dim());
  MatchedPair mp = split_matched_pair(l.validated(), h, n);
  auto check = [&](const char* key, const std::vector<Mat>& expected, std::size_t side) {
    const std::string p = std::string("/") + key;
    const auto& arr = expect_array(j[key], p);
    if (arr.size() != expected.size()) throw SchemaError(p, "expected " + std::to_string(expected.size()) + " matrices");
    for (std::size_t i = 0; i < arr.size(); ++i)
      if (mat_from_json(arr[i], child(p, i), side, side) != expected[i])
        throw SchemaError(child(p, i), "does not match the action computed from l, h and n");
  };
  check("act_h_on_n", mp.act_h_on_n, mp.n.dim());
  check("act_n_on_h", mp.act_n_on_h, mp.h.dim());
  return mp;
}

Json fiber_to_json(const FiberResult& r) {
  Json out;
  out["lp"] = subspace_to_json(r.lp);
  out["dim_lp"] = r.lp.dim();
  out["dim_gp"] = r.dim_gp;
  out["dim_tp"] = r.dim_tp;
  out["dim_overlap"] = r.dim_overlap;
  return out;
}

FiberResult fiber_from_json(const Json& j) {
  expect_object(j, "", {"lp", "dim_lp", "dim_gp", "dim_tp", "dim_overlap"}, {"ambient_dim", "isotropic", "phi_image"});
  FiberResult r;
  r.dim_gp = size_from_json(j["dim_gp"], "/dim_gp");
  r.dim_tp = size_from_json(j["dim_tp"], "/dim_tp");
  r.dim_overlap = size_from_json(j["dim_overlap"], "/dim_overlap");
  const auto& rows = expect_array(j["lp"], "/lp");
  const std::size_t ambient = j.contains("ambient_dim") ? size_from_json(j["ambient_dim"], "/ambient_dim")
                              : rows.empty()            ? 0
                                                        : rows[0].size();
  r.lp = subspace_from_json(rows, "/lp", ambient);
  if (size_from_json(j["dim_lp"], "/dim_lp") != r.lp.dim()) throw SchemaError("/dim_lp", "disagrees with /lp");
  return r;
}

Json flag_to_json(const FlagCohomologyTable& t) {
  Json out;
  out["type"] = t.type_name;
  out["dims"] = t.dims;
  out["total"] = t.total;
  return out;
}

FlagCohomologyTable flag_from_json(const Json& j) {
  expect_object(j, "", {"type", "dims", "total"});
  FlagCohomologyTable t;
  if (!j["type"].is_string()) throw SchemaError("/type", "expected a string");
  t.type_name = j["type"].get<std::string>();
  const auto& d = expect_array(j["dims"], "/dims");
  for (std::size_t k = 0; k < d.size(); ++k) t.dims.push_back(size_from_json(d[k], child("/dims", k)));
  t.total = size_from_json(j["total"], "/total");
  std::size_t sum = 0;
  for (auto x : t.dims) sum += x;
  if (sum != t.total) throw SchemaError("/total", "is not the sum of /dims");
  return t;
}

RootSystem root_system_from_json(const Json& j) {
  expect_object(j, "", {"cartan"}, {"name"});
  const auto& c = expect_array(j["cartan"], "/cartan");
  IntMatrix a;
  for (std::size_t r = 0; r < c.size(); ++r) {
    const auto& row = expect_array(c[r], child("/cartan", r));
    a.emplace_back();
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer()) throw SchemaError(child(child("/cartan", r), k), "expected an integer");
      a.back().push_back(row[k].get<long>());
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("/name", "expected a string");
    name = j["name"].get<std::string>();
  }
  try {
    return build_root_system(a, name);
  } catch (const InputError& e) {
    throw SchemaError("/cartan", e.what());
  }
}

Json jacobi_report_to_json(const JacobiReport& r, const std::vector<std::string>& names) {
  Json out;
  out["ok"] = r.ok;
  Json ws = Json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"triple", {names[w.i], names[w.j], names[w.k]}},
                  {"indices", {w.i, w.j, w.k}},
                  {"residual", coeffs_to_json(w.residual, names)}});
  out["witnesses"] = ws;
  return out;
}

} // namespace plie::io
