#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "extmax/classical.hpp"
#include "extmax/energy_momentum.hpp"
#include "extmax/identities.hpp"
#include "extmax/maxwell.hpp"

namespace py = pybind11;
using namespace extmax;

namespace {

using TermMap = std::map<std::vector<int>, double>;

Multivector from_terms(const Signature& sig, int grade, const TermMap& terms) {
  std::vector<Term<double>> t;
  for (const auto& [idx, v] : terms) t.push_back({Blade::from_indices(idx), v});
  return Multivector(sig, grade, t);
}

TermMap to_terms(const Multivector& m) {
  TermMap out;
  for (const auto& t : m.terms()) out[t.blade.indices()] = t.value;
  return out;
}

std::vector<std::vector<double>> dense(const Bitensor& t) {
  std::vector<std::vector<double>> out(t.dimension(), std::vector<double>(t.dimension()));
  for (int i = 0; i < t.dimension(); ++i)
    for (int j = 0; j < t.dimension(); ++j) out[i][j] = t(i, j);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exterior-algebra multivectors and generalized Maxwell fields over (k,n) space-times";

  py::class_<Signature>(m, "Signature")
      .def(py::init<int, int>(), py::arg("k"), py::arg("n"))
      .def_property_readonly("k", &Signature::time_dims)
      .def_property_readonly("n", &Signature::space_dims)
      .def_property_readonly("dimension", &Signature::dimension)
      .def("metric", &Signature::metric)
      .def(py::self == py::self)
      .def("__repr__", [](const Signature& s) { return "Signature" + s.str(); });

  py::class_<Multivector>(m, "Multivector")
      .def(py::init(&from_terms), py::arg("signature"), py::arg("grade"), py::arg("terms") = TermMap{},
           "terms maps strictly increasing index tuples to coefficients")
      .def_static("basis", [](const Signature& s, const std::vector<int>& idx,
                              double c) { return Multivector::basis(s, Blade::from_indices(idx), c); },
                  py::arg("signature"), py::arg("indices"), py::arg("coefficient") = 1.0)
      .def_static("scalar", &Multivector::scalar)
      .def_static("vector", &Multivector::vector)
      .def_property_readonly("grade", &Multivector::grade)
      .def_property_readonly("signature", &Multivector::signature)
      .def("coefficient", [](const Multivector& v, const std::vector<int>& idx) {
        return v.coefficient(Blade::from_indices(idx));
      })
      .def("terms",
           [](const Multivector& v) {
             py::dict out;
             for (const auto& [idx, c] : to_terms(v)) out[py::tuple(py::cast(idx))] = c;
             return out;
           })
      .def("max_abs", &Multivector::max_abs)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(double() * py::self)
      .def("__mul__", [](const Multivector& v, double s) { return s * v; })
      .def(py::self == py::self)
      .def("__repr__", [](const Multivector& v) {
        std::string s = "Multivector(grade=" + std::to_string(v.grade()) + ", terms={";
        bool first = true;
        for (const auto& [idx, c] : to_terms(v)) {
          if (!first) s += ", ";
          first = false;
          s += "(";
          for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
          s += "): " + py::repr(py::float_(c)).cast<std::string>();
        }
        return s + "})";
      });

  m.def("dot", [](const Multivector& a, const Multivector& b) { return dot(a, b); });
  m.def("wedge", [](const Multivector& a, const Multivector& b) { return wedge(a, b); });
  m.def("left_interior", [](const Multivector& a, const Multivector& b) { return left_interior(a, b); });
  m.def("right_interior", [](const Multivector& a, const Multivector& b) { return right_interior(a, b); });
  m.def("hodge", [](const Multivector& a) { return hodge(a); });
  m.def("inv_hodge", [](const Multivector& a) { return inv_hodge(a); });
  m.def("cross", [](const Multivector& a, const Multivector& b) { return cross(a, b); });
  m.def("sort_with_sign", [](const std::vector<int>& seq, int dimension) {
    auto r = sort_with_sign(seq, dimension);
    return py::make_tuple(r.sorted, r.sign);
  });

  m.def(
      "verify_identities",
      [](const Signature& sig, bool inject_sign_flip) {
        IdentityOptions opts;
        opts.inject_sign_flip = inject_sign_flip;
        auto rep = verify_identities(sig, opts);
        py::dict results;
        for (const auto& r : rep.results) results[py::str(r.name)] = r.max_residual;
        return py::make_tuple(rep.max_residual, results);
      },
      py::arg("signature"), py::arg("inject_sign_flip") = false,
      "Exact identity sweep; returns (max_residual, {identity: residual})");

  m.def("stress_tensor", [](const Multivector& f) { return dense(stress_tensor_explicit(f)); });
  m.def("stress_tensor_def", [](const Multivector& f) { return dense(stress_tensor_def(f)); });
  m.def("trace", [](const Multivector& f) { return trace(stress_tensor_explicit(f)); });
  m.def("trace_formula", &trace_formula);
  m.def("lorentz_force", &lorentz_force, py::arg("F"), py::arg("J"));
  m.def("classical_pack", &classical_pack_point, py::arg("E"), py::arg("B"));
  m.def("classical_unpack", [](const Multivector& f) {
    std::array<double, 3> e, b;
    classical_unpack_point(f, e, b);
    return py::make_tuple(e, b);
  });
  m.def("dof_count", &dof_count, py::arg("r"), py::arg("k"), py::arg("n"));
  m.def("null_frequency", &null_frequency, py::arg("signature"), py::arg("xi_bar"), py::arg("axis"));

  m.def(
      "_run",
      [](const std::string& command, const std::string& config, std::optional<unsigned long long> seed,
         std::optional<double> tol, std::optional<int> points, std::optional<int> kmax, std::optional<int> nmax,
         int cap) {
        cli::RunConfig cfg;
        cfg.command = command;
        cfg.config_path = config;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.points = points;
        cfg.kmax = kmax;
        cfg.nmax = nmax;
        cfg.cap = cap;
        cli::CommandResult r;
        {
          py::gil_scoped_release release;
          r = cli::run(cfg);
        }
        return py::make_tuple(r.report.is_null() ? std::string() : r.report.dump(), r.exit_code, r.summary);
      },
      py::arg("command"), py::arg("config") = "", py::arg("seed") = py::none(), py::arg("tol") = py::none(),
      py::arg("points") = py::none(), py::arg("kmax") = py::none(), py::arg("nmax") = py::none(),
      py::arg("cap") = 6);
}
