#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hrg/rightends.hpp"
#include "hrg/tableaux.hpp"
#include "hrg/verify.hpp"

namespace py = pybind11;
using namespace hrg;

namespace {

Convention conv(const std::string& s) { return parse_convention(s); }

std::vector<std::string> labels(const KGraph& kg) {
  std::vector<std::string> out;
  for (const auto& v : kg.vertices()) out.push_back(kg.vertex_label(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_hrgraph, m) {
  m.doc() = "Crystals, Cartan braidings and the associated higher-rank graphs.";

  // Later registrations are tried first, so the subclass goes last.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<KGraph, std::shared_ptr<KGraph>>(m, "KGraph")
      .def(py::init([](const std::string& algebra, const std::string& convention) {
             return std::make_shared<KGraph>(Algebra::builtin(algebra, conv(convention)));
           }),
           py::arg("algebra"), py::arg("convention") = "hongkang")
      .def("vertices", &labels)
      .def("weyl_vertex",
           [](const KGraph& kg, const std::string& w) {
             return kg.vertex_label(kg.weyl_vertex(kg.algebra().weyl().parse(w)));
           })
      .def("weyl_label",
           [](const KGraph& kg, const std::string& v) -> std::optional<std::string> {
             auto w = kg.weyl_label(kg.parse_vertex(v));
             if (!w) return std::nullopt;
             return kg.algebra().weyl().name(*w);
           })
      .def("skeleton_dot",
           [](const KGraph& kg, bool loops) { return kg.skeleton().to_dot(loops, "skeleton"); },
           py::arg("show_loops") = false)
      .def("skeleton_json",
           [](const KGraph& kg, bool loops) { return kg.skeleton().to_json(loops).dump(); },
           py::arg("show_loops") = false)
      .def("right_weak_embeddings",
           [](const KGraph& kg, bool anchored) { return uniqueness_search_right_weak(kg, anchored); },
           py::arg("anchored") = true)
      .def("left_weak_embeddings",
           [](const KGraph& kg, bool anchored) { return left_weak_embedding_search(kg, anchored); },
           py::arg("anchored") = true);

  m.def(
      "braiding",
      [](const std::string& algebra, const std::string& convention, int i, int j) {
        auto alg = Algebra::builtin(algebra, conv(convention));
        const auto& x = *alg->fundamental(i - 1);
        const auto& y = *alg->fundamental(j - 1);
        std::vector<std::pair<std::string, std::optional<std::string>>> out;
        for (int a = 0; a < x.size(); ++a)
          for (int b = 0; b < y.size(); ++b) {
            auto s = alg->sigma(i - 1, j - 1, a, b);
            std::optional<std::string> img;
            if (s) img = y.label(s->first) + "⊗" + x.label(s->second);
            out.emplace_back(x.label(a) + "⊗" + y.label(b), img);
          }
        return out;
      },
      py::arg("algebra"), py::arg("convention") = "hongkang", py::arg("i") = 1,
      py::arg("j") = 2);

  m.def(
      "keys",
      [](const std::vector<std::vector<int>>& rows) {
        const Tableau t = Tableau::from_rows(rows);
        if (!t.is_semistandard()) throw PreconditionError("tableau is not semistandard");
        return std::make_pair(left_key(t).rows(), right_key(t).rows());
      },
      py::arg("rows"), "Left and right keys of a tableau given by rows.");

  m.def(
      "verify",
      [](const std::string& suite, std::vector<std::string> algebras) {
        verify::Options opt;
        opt.algebras = std::move(algebras);
        py::gil_scoped_release release;
        return verify::suite_json(suite, verify::run_suite(suite, opt)).dump();
      },
      py::arg("suite"), py::arg("algebras") = std::vector<std::string>{},
      "Runs a named suite and returns its JSON report as a string.");

  m.attr("suites") = verify::suite_names();
}
