// Python module _core. Documents cross the boundary as JSON text; the
// poissonlie package converts them to and from Python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plie/io.hpp"

namespace py = pybind11;
using namespace plie;
using io::Json;

namespace {

std::string dump(const Json& j) { return j.dump(); }

RootSystem roots_from(const std::string& type_name, const std::string& cartan_doc) {
  if (!cartan_doc.empty()) {
    auto rs = io::root_system_from_json(io::parse_text(cartan_doc));
    if (rs.type_name.empty()) rs.type_name = "custom";
    return rs;
  }
  return build_root_system(type_name);
}

Json roots_to_json(const RootSystem& rs) {
  return {{"type", rs.type_name},
          {"rank", rs.rank},
          {"cartan", rs.cartan},
          {"positive_roots", rs.positive_roots},
          {"simple_lengths", io::vec_to_json(rs.simple_lengths)}};
}

std::vector<std::string> dual_names(const LieAlgebra& g) {
  std::vector<std::string> out = g.basis_names();
  for (const auto& n : g.basis_names()) out.push_back(n + "*");
  return out;
}

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

std::string validate(const std::string& doc) {
  const Json j = io::parse_text(doc);
  Json out;
  if (j.is_object() && j.contains("delta")) {
    const auto b = io::bialgebra_from_json(j);
    out["jacobi"] = io::jacobi_report_to_json(validate_jacobi(b.g), b.g.basis_names());
    out["compatibility"] = io::jacobi_report_to_json(check_compatibility(b), dual_names(b.g));
  } else {
    const auto g = io::algebra_from_json(j);
    out["jacobi"] = io::jacobi_report_to_json(validate_jacobi(g), g.basis_names());
  }
  return dump(out);
}

std::string double_algebra(const std::string& doc) {
  const auto d = build_double(io::bialgebra_from_json(io::parse_text(doc)));
  return dump(io::algebra_to_json(d.d));
}

std::string cohomology(const std::string& doc, const std::string& module) {
  const LieAlgebra g = io::algebra_from_json(io::parse_text(doc)).validated();
  Representation m;
  if (module == "trivial") m = Representation::trivial(g);
  else if (module == "adjoint") m = Representation::adjoint(g);
  else if (module == "coadjoint") m = Representation::coadjoint(g);
  else throw InputError("unknown module '" + module + "'");
  return dump(cohomology_dims(ce_complex(g, m)));
}

std::string relative(const std::string& doc, const std::string& h) {
  const LieAlgebra l = io::algebra_from_json(io::parse_text(doc)).validated();
  return dump(relative_cohomology(l, io::subspace_from_json(io::parse_text(h), "/h", l.dim())));
}

std::string fiber(const std::string& doc) {
  const auto d = io::point_data_from_json(io::parse_text(doc));
  const auto r = anchor_kernel(d);
  Json out = io::fiber_to_json(r);
  out["ambient_dim"] = d.g_dim() + d.p_dim();
  out["isotropic"] = isotropy_check(d, r.lp);
  out["phi_image"] = io::subspace_to_json(phi_embed(d, r.lp));
  return dump(out);
}

std::string matched(const std::string& doc, const std::string& h, const std::string& n) {
  const Json j = io::parse_text(doc);
  if (j.is_object() && j.contains("delta")) {
    const auto b = io::bialgebra_from_json(j);
    if (!n.empty()) throw InputError("n is determined by h for a bialgebra");
    return dump(io::matched_to_json(coisotropic_double(b, io::subspace_from_json(io::parse_text(h), "/h", b.dim()))));
  }
  const LieAlgebra l = io::algebra_from_json(j).validated();
  if (n.empty()) throw InputError("a complement n is required");
  return dump(io::matched_to_json(split_matched_pair(l, io::subspace_from_json(io::parse_text(h), "/h", l.dim()),
                                                     io::subspace_from_json(io::parse_text(n), "/n", l.dim()))));
}

std::string flag(const std::string& type_name, const std::string& cartan) {
  return dump(io::flag_to_json(flag_cohomology(roots_from(type_name, cartan))));
}

std::string kostant(const std::string& type_name, const std::string& cartan) {
  const auto rep = kostant_check(roots_from(type_name, cartan));
  Json classes = Json::array();
  for (const auto& c : rep.classes) classes.push_back({{"degree", c.degree}, {"weight", c.weight}, {"weyl_index", c.weyl_index}});
  return dump({{"type", rep.type_name},
               {"ok", rep.ok()},
               {"dims", rep.nilradical_dims},
               {"length_histogram", rep.length_histogram},
               {"dims_match", rep.dims_match},
               {"weights_match", rep.weights_match},
               {"weights_distinct", rep.weights_distinct},
               {"classes", classes}});
}

std::string leaves(const std::string& type_name, const std::string& cartan) {
  Json out = Json::array();
  for (const auto& l : bruhat_leaves(roots_from(type_name, cartan)))
    out.push_back({{"weyl_index", l.weyl_index}, {"length", l.length}, {"dim", l.leaf_dim}});
  return dump(out);
}

std::string root_system(const std::string& type_name, const std::string& cartan) {
  return dump(roots_to_json(roots_from(type_name, cartan)));
}

std::string weyl_group(const std::string& type_name, const std::string& cartan) {
  const auto rs = roots_from(type_name, cartan);
  Json out = Json::array();
  for (const auto& w : weyl_enumerate(rs))
    out.push_back({{"matrix", w.matrix}, {"length", w.length}, {"inversion_set", w.inversion_set}});
  return dump(out);
}

std::string standard_bialgebra_of(const std::string& type_name, const std::string& cartan) {
  return dump(io::bialgebra_to_json(standard_bialgebra(chevalley_algebra(roots_from(type_name, cartan)))));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Poisson-Lie computations over the rationals (JSON text interface).";

  static py::exception<std::exception> base(m, "PlieError");
  static py::exception<InputError> input_error(m, "InputError", base.ptr());
  static py::exception<MathRejection> math_rejection(m, "MathRejection", base.ptr());
  static py::exception<ConditionFailure> condition_failure(m, "ConditionFailure", math_rejection.ptr());
  static py::exception<JacobiFailure> jacobi_failure(m, "JacobiFailure", math_rejection.ptr());

  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](py::handle type, const std::string& what, const char* attr, py::object value) {
      py::object err = type(what);
      if (attr) err.attr(attr) = std::move(value);
      PyErr_SetObject(type.ptr(), err.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const io::SchemaError& e) {
      raise(input_error, e.what(), "pointer", py::str(e.pointer()));
    } catch (const InputError& e) {
      raise(input_error, e.what(), nullptr, py::none());
    } catch (const JacobiFailure& e) {
      const auto& r = e.report();
      const std::size_t n = r.witnesses.empty() ? 0 : r.witnesses.front().residual.size();
      raise(jacobi_failure, e.what(), "report", py::str(io::jacobi_report_to_json(r, index_names(n)).dump()));
    } catch (const ConditionFailure& e) {
      raise(condition_failure, e.what(), "condition", py::str(condition_name(e.condition())));
    } catch (const MathRejection& e) {
      raise(math_rejection, e.what(), nullptr, py::none());
    }
  });

  m.def("validate", &validate, py::arg("doc"));
  m.def("double", &double_algebra, py::arg("doc"));
  m.def("cohomology", &cohomology, py::arg("doc"), py::arg("module") = "trivial");
  m.def("relative_cohomology", &relative, py::arg("doc"), py::arg("h"));
  m.def("anchor_kernel", &fiber, py::arg("doc"));
  m.def("matched_pair", &matched, py::arg("doc"), py::arg("h"), py::arg("n") = "");
  m.def("flag_cohomology", &flag, py::arg("type_name") = "", py::arg("cartan") = "");
  m.def("kostant_check", &kostant, py::arg("type_name") = "", py::arg("cartan") = "");
  m.def("bruhat_leaves", &leaves, py::arg("type_name") = "", py::arg("cartan") = "");
  m.def("root_system", &root_system, py::arg("type_name") = "", py::arg("cartan") = "");
  m.def("weyl_group", &weyl_group, py::arg("type_name") = "", py::arg("cartan") = "");
  m.def("standard_bialgebra", &standard_bialgebra_of, py::arg("type_name") = "", py::arg("cartan") = "");
  m.def("builtin_types", &builtin_types);
}
