// plie: command-line front end.
//
// Exit status: 0 success, 1 mathematical rejection, 2 malformed input.
// Reports go to stdout, diagnostics to stderr; with --json both are JSON.

#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plie/io.hpp"

using namespace plie;
using io::Json;

namespace {

struct RunConfig {
  std::string input_path;
  std::string type_name;
  std::string module = "trivial";
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw InputError("an input file is required");
  return io::parse_text(read_file(cfg.input_path));
}

std::string vec_text(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    const bool neg = sgn(v[k]) < 0;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    const Rat a = abs(v[k]);
    if (a != 1) out += to_string(a) + " ";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

void print_algebra(std::ostream& os, const LieAlgebra& g) {
  os << "dim " << g.dim() << "\n";
  for (const auto& e : g.nonzero_brackets())
    os << "[" << g.basis_names()[e.i] << ", " << g.basis_names()[e.j] << "] = " << vec_text(e.coeffs, g.basis_names()) << "\n";
}

void print_dims(std::ostream& os, const std::vector<std::size_t>& dims, const char* index = "degree",
                const char* value = "dim") {
  std::size_t w = 1;
  for (std::size_t k = 0; k < dims.size(); ++k)
    w = std::max({w, std::to_string(k).size(), std::to_string(dims[k]).size()});
  const int label = int(std::max(std::strlen(index), std::strlen(value)));
  os << std::left << std::setw(label) << index << std::right << " |";
  for (std::size_t k = 0; k < dims.size(); ++k) os << " " << std::setw(int(w)) << k;
  os << "\n" << std::left << std::setw(label) << value << std::right << " |";
  for (auto d : dims) os << " " << std::setw(int(w)) << d;
  os << "\n";
}

void emit(const RunConfig& cfg, const Json& j, const std::function<void(std::ostream&)>& text) {
  if (cfg.json) std::cout << j.dump() << "\n";
  else text(std::cout);
}

// A mathematical rejection with its diagnostic; main() maps it to status 1.
struct Rejected {
  Json diagnostic;
  std::string text;
};

RootSystem roots_from(const RunConfig& cfg) {
  if (!cfg.type_name.empty() && !cfg.input_path.empty()) throw InputError("give either --type or a Cartan matrix file, not both");
  if (!cfg.type_name.empty()) return build_root_system(cfg.type_name);
  if (cfg.input_path.empty()) throw InputError("--type or a Cartan matrix file is required");
  auto rs = io::root_system_from_json(load(cfg));
  if (rs.type_name.empty()) rs.type_name = "custom";
  return rs;
}

std::vector<std::string> dual_names(const LieAlgebra& g) {
  std::vector<std::string> out = g.basis_names();
  for (const auto& n : g.basis_names()) out.push_back(n + "*");
  return out;
}

Rejected jacobi_rejection(const std::string& what, const JacobiReport& r, const std::vector<std::string>& names) {
  Json d{{"error", "jacobi_failure"}, {"message", what}, {"report", io::jacobi_report_to_json(r, names)}};
  std::string text = "rejected: " + what;
  for (const auto& w : r.witnesses)
    text += "\n  witness (" + names[w.i] + ", " + names[w.j] + ", " + names[w.k] + "): residual " + vec_text(w.residual, names);
  return {d, text};
}

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

LieAlgebra checked(const LieAlgebra& g) {
  const auto report = validate_jacobi(g);
  if (!report.ok) throw jacobi_rejection("Jacobi identity fails", report, g.basis_names());
  return g.validated();
}

int run_validate(const RunConfig& cfg) {
  const Json j = load(cfg);
  const bool bialg = j.is_object() && j.contains("delta");
  const LieBialgebra b = bialg ? io::bialgebra_from_json(j) : LieBialgebra{io::algebra_from_json(j), {}};
  checked(b.g);
  Json out{{"jacobi", "ok"}};
  if (bialg) {
    const auto compat = check_compatibility(b);
    if (!compat.ok) throw jacobi_rejection("cocommutator is not compatible with the bracket", compat, dual_names(b.g));
    out["compatibility"] = "ok";
  }
  emit(cfg, out, [&](std::ostream& os) {
    os << "jacobi: ok\n";
    if (bialg) os << "compatibility: ok\n";
  });
  return 0;
}

int run_double(const RunConfig& cfg) {
  const LieBialgebra b = io::bialgebra_from_json(load(cfg));
  checked(b.g);
  const auto compat = check_compatibility(b);
  if (!compat.ok) throw jacobi_rejection("double Lie algebra fails Jacobi", compat, dual_names(b.g));
  const auto d = build_double(b);
  Json out{{"compatibility", "ok"}, {"double", io::algebra_to_json(d.d)}};
  emit(cfg, out, [&](std::ostream& os) {
    os << "compatibility: ok\n";
    print_algebra(os, d.d);
  });
  return 0;
}

int run_manin(const RunConfig& cfg) {
  const Json j = load(cfg);
  const LieBialgebra b = io::bialgebra_from_json(j, {"a", "b"});
  checked(b.g);
  const auto compat = check_compatibility(b);
  if (!compat.ok) throw jacobi_rejection("double Lie algebra fails Jacobi", compat, dual_names(b.g));
  const auto d = build_double(b);
  const std::size_t dim = d.d.dim();
  const Subspace a = j.contains("a") ? io::subspace_from_json(j["a"], "/a", dim) : d.g_part;
  const Subspace c = j.contains("b") ? io::subspace_from_json(j["b"], "/b", dim) : d.gstar_part;
  Json checks{{"a_subalgebra", is_subalgebra(d.d, a)},
              {"b_subalgebra", is_subalgebra(d.d, c)},
              {"a_isotropic", is_isotropic(d, a)},
              {"b_isotropic", is_isotropic(d, c)},
              {"complementary", intersect(a, c).dim() == 0 && a.dim() + c.dim() == dim}};
  const bool ok = check_manin_triple(d, a, c);
  if (!ok) {
    std::string text = "rejected: not a Manin triple";
    for (const auto& [k, v] : checks.items())
      if (!v.get<bool>()) text += "\n  fails: " + k;
    throw Rejected{{{"error", "not_manin_triple"}, {"checks", checks}}, text};
  }
  Json out{{"manin", "ok"}, {"checks", checks}};
  emit(cfg, out, [&](std::ostream& os) { os << "manin: ok\n"; });
  return 0;
}

int run_cohomology(const RunConfig& cfg) {
  const LieAlgebra g = checked(io::algebra_from_json(load(cfg)));
  Representation m;
  if (cfg.module == "trivial") m = Representation::trivial(g);
  else if (cfg.module == "adjoint") m = Representation::adjoint(g);
  else if (cfg.module == "coadjoint") m = Representation::coadjoint(g);
  else throw InputError("unknown module '" + cfg.module + "'");
  const auto dims = cohomology_dims(ce_complex(g, m));
  Json out{{"module", cfg.module}, {"dims", dims}};
  emit(cfg, out, [&](std::ostream& os) { print_dims(os, dims); });
  return 0;
}

int run_relative(const RunConfig& cfg) {
  const Json j = load(cfg);
  const LieAlgebra l = checked(io::algebra_from_json(j, {"h"}));
  if (!j.contains("h")) throw io::SchemaError("/h", "missing required field");
  const Subspace h = io::subspace_from_json(j["h"], "/h", l.dim());
  const auto dims = relative_cohomology(l, h);
  Json out{{"dims", dims}};
  emit(cfg, out, [&](std::ostream& os) { print_dims(os, dims); });
  return 0;
}

int run_fiber(const RunConfig& cfg) {
  const PointActionData d = io::point_data_from_json(load(cfg));
  const auto r = anchor_kernel(d);
  Json out = io::fiber_to_json(r);
  out["ambient_dim"] = d.g_dim() + d.p_dim();
  out["isotropic"] = isotropy_check(d, r.lp);
  out["phi_image"] = io::subspace_to_json(phi_embed(d, r.lp));
  emit(cfg, out, [&](std::ostream& os) {
    os << "dim lp = " << r.lp.dim() << " = " << r.dim_gp << " (g_p) + " << r.dim_tp << " (t_p) + " << r.dim_overlap
       << " (overlap)\n";
    os << "isotropic: " << (out["isotropic"].get<bool>() ? "yes" : "no") << "\n";
  });
  return 0;
}

int run_matched(const RunConfig& cfg) {
  const Json j = load(cfg);
  MatchedPair mp;
  if (j.is_object() && j.contains("delta")) {
    const LieBialgebra b = io::bialgebra_from_json(j, {"h"});
    if (!j.contains("h")) throw io::SchemaError("/h", "missing required field");
    mp = coisotropic_double(LieBialgebra{checked(b.g), b.delta}, io::subspace_from_json(j["h"], "/h", b.dim()));
  } else {
    const LieAlgebra l = checked(io::algebra_from_json(j, {"h", "n"}));
    for (const char* key : {"h", "n"})
      if (!j.contains(key)) throw io::SchemaError(std::string("/") + key, "missing required field");
    mp = split_matched_pair(l, io::subspace_from_json(j["h"], "/h", l.dim()), io::subspace_from_json(j["n"], "/n", l.dim()));
  }
  emit(cfg, io::matched_to_json(mp), [&](std::ostream& os) {
    os << "h: dim " << mp.h.dim() << ", n: dim " << mp.n.dim() << "\n";
    print_algebra(os, mp.l);
  });
  return 0;
}

int run_flag(const RunConfig& cfg) {
  const auto rs = roots_from(cfg);
  const auto t = flag_cohomology(rs);
  emit(cfg, io::flag_to_json(t), [&](std::ostream& os) {
    os << "type " << t.type_name << "\n";
    print_dims(os, t.dims);
    os << "total " << t.total << "\n";
  });
  return 0;
}

int run_leaves(const RunConfig& cfg) {
  const auto rs = roots_from(cfg);
  const auto leaves = bruhat_leaves(rs);
  std::vector<std::size_t> census(2 * rs.positive_roots.size() + 1, 0);
  Json ls = Json::array();
  for (const auto& l : leaves) {
    ++census[l.leaf_dim];
    ls.push_back({{"weyl_index", l.weyl_index}, {"length", l.length}, {"dim", l.leaf_dim}});
  }
  Json out{{"type", rs.type_name}, {"count", leaves.size()}, {"census", census}, {"leaves", ls}};
  emit(cfg, out, [&](std::ostream& os) {
    os << "type " << rs.type_name << ": " << leaves.size() << " leaves\n";
    print_dims(os, census, "leaf dim", "leaves");
  });
  return 0;
}

int run_kostant(const RunConfig& cfg) {
  const auto rs = roots_from(cfg);
  const auto rep = kostant_check(rs);
  Json classes = Json::array();
  for (const auto& c : rep.classes) classes.push_back({{"degree", c.degree}, {"weight", c.weight}, {"weyl_index", c.weyl_index}});
  Json out{{"type", rep.type_name},
           {"dims", rep.nilradical_dims},
           {"length_histogram", rep.length_histogram},
           {"dims_match", rep.dims_match},
           {"weights_match", rep.weights_match},
           {"weights_distinct", rep.weights_distinct},
           {"classes", classes}};
  emit(cfg, out, [&](std::ostream& os) {
    os << "type " << rep.type_name << "\nH(n):\n";
    print_dims(os, rep.nilradical_dims);
    os << "Weyl lengths:\n";
    print_dims(os, rep.length_histogram);
    for (const auto& c : rep.classes) {
      os << "  degree " << c.degree << " weight (";
      for (std::size_t i = 0; i < c.weight.size(); ++i) os << (i ? "," : "") << c.weight[i];
      os << ")\n";
    }
    os << "kostant: " << (rep.ok() ? "ok" : "MISMATCH") << "\n";
  });
  if (!rep.ok()) throw Rejected{{{"error", "kostant_mismatch"}}, "rejected: H(n) does not match the Weyl group"};
  return 0;
}

void diagnose(const RunConfig& cfg, const Json& d, const std::string& text) {
  if (cfg.json) std::cerr << d.dump() << "\n";
  else std::cerr << text << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie bialgebra, matched pair and flag cohomology computations"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
    bool roots;
  };
  const std::vector<Sub> subs{
      {"validate", "check the Jacobi identity (and compatibility if delta is given)", run_validate, false},
      {"double", "build the double Lie algebra of a bialgebra", run_double, false},
      {"manin", "check a Manin triple in the double (default: g and g*)", run_manin, false},
      {"cohomology", "Chevalley-Eilenberg cohomology dimensions", run_cohomology, false},
      {"relative", "relative cohomology H(l, h)", run_relative, false},
      {"fiber", "anchor kernel at a point", run_fiber, false},
      {"matched", "split l = h + n, or the coisotropic double of a bialgebra", run_matched, false},
      {"flag", "invariant Poisson cohomology of the flag manifold", run_flag, true},
      {"leaves", "Bruhat cells as symplectic leaves", run_leaves, true},
      {"kostant", "nilradical cohomology against the Weyl group", run_kostant, true},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> commands;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_flag("--json", cfg.json, "machine-readable output");
    if (s.roots) {
      sub->add_option("--type", cfg.type_name, "built-in type: A1 A2 A3 B2 B3 C3 G2");
      sub->add_option("cartan", cfg.input_path, "JSON file {\"cartan\": [[...]]}");
    } else {
      sub->add_option("input", cfg.input_path, "JSON input file")->required();
    }
    if (std::string(s.name) == "cohomology")
      sub->add_option("--module", cfg.module, "trivial, adjoint or coadjoint");
    commands.emplace_back(sub, &s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, s] : commands) {
    if (!sub->parsed()) continue;
    try {
      return s->run(cfg);
    } catch (const Rejected& r) {
      diagnose(cfg, r.diagnostic, r.text);
      return 1;
    } catch (const io::SchemaError& e) {
      diagnose(cfg, {{"error", "schema"}, {"pointer", e.pointer()}, {"message", e.what()}},
               std::string("schema error at ") + e.what());
      return 2;
    } catch (const InputError& e) {
      diagnose(cfg, {{"error", "input"}, {"message", e.what()}}, std::string("input error: ") + e.what());
      return 2;
    } catch (const JacobiFailure& e) {
      const std::size_t n = e.report().witnesses.empty() ? 0 : e.report().witnesses[0].residual.size();
      const auto r = jacobi_rejection(e.what(), e.report(), index_names(n));
      diagnose(cfg, r.diagnostic, r.text);
      return 1;
    } catch (const ConditionFailure& e) {
      diagnose(cfg, {{"error", condition_name(e.condition())}, {"message", e.what()}},
               std::string("rejected (") + condition_name(e.condition()) + "): " + e.what());
      return 1;
    } catch (const MathRejection& e) {
      diagnose(cfg, {{"error", "rejected"}, {"message", e.what()}}, std::string("rejected: ") + e.what());
      return 1;
    }
  }
  return 2;
}
