#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "virtgraph/brauer.hpp"
#include "virtgraph/cli.hpp"
#include "virtgraph/io.hpp"
#include "virtgraph/penrose.hpp"
#include "virtgraph/spatial.hpp"

namespace py = pybind11;
using namespace vg;

namespace {

Engine engine_of(const std::string& s) {
  if (s == "state") return Engine::StateSum;
  if (s == "cd") return Engine::ContractionDeletion;
  if (s == "brauer") return Engine::Brauer;
  throw py::value_error("engine must be state, cd or brauer");
}

Variant variant_of(const std::string& s) {
  if (s == "s") return Variant::S;
  if (s == "f") return Variant::F;
  throw py::value_error("variant must be s or f");
}

SpatialDiagram named_fixture(const std::string& name) {
  namespace fx = fixtures;
  if (name == "theta_p") return crossingless(fx::theta_p());
  if (name == "theta_t") return crossingless(fx::theta_t());
  if (name == "loop1") return crossingless(fx::loop1());
  if (name == "bouquet2_int") return crossingless(fx::bouquet2_int());
  if (name == "bridge") return crossingless(fx::bridge());
  if (name == "k33_std") return crossingless(fx::k33_std());
  if (name == "k4") return crossingless(fx::k4());
  if (name == "theta_t_as_spatial") return fx::theta_t_as_spatial();
  if (name == "k4_r2") return fx::k4_r2();
  if (name == "trefoil") return fx::trefoil();
  if (name == "knotted_theta") return fx::knotted_theta();
  if (name == "k33_drawn") return fx::k33_drawn();
  throw py::key_error("unknown fixture " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ribbon graph and virtual spatial graph invariants";
  py::register_exception<MapError>(m, "MapError", PyExc_ValueError);

  py::class_<SpatialDiagram>(m, "Diagram")
      .def_static("from_vgf", &parse_vgf, py::arg("text"))
      .def_static("fixture", &named_fixture, py::arg("name"))
      .def("to_vgf", [](const SpatialDiagram& d) { return serialize_vgf(d); })
      .def_property_readonly("vertices", [](const SpatialDiagram& d) { return vertex_count(d.base); })
      .def_property_readonly("edges", [](const SpatialDiagram& d) { return d.base.edge_count(); })
      .def_property_readonly("crossings", [](const SpatialDiagram& d) { return d.crossings.size(); })
      .def("input_hash", [](const SpatialDiagram& d) { return input_hash(d); })
      .def("__repr__", [](const SpatialDiagram& d) {
        std::ostringstream os;
        os << "<Diagram v=" << vertex_count(d.base) << " e=" << d.base.edge_count() << " crossings=" << d.crossings.size()
           << ">";
        return os.str();
      });

  m.def("s_poly", [](const SpatialDiagram& d, const std::string& e) { return s_poly(d.base, engine_of(e)).str(); },
        py::arg("diagram"), py::arg("engine") = "cd");
  m.def("flow_poly", [](const SpatialDiagram& d, const std::string& e) { return flow_poly(d.base, engine_of(e)).str(); },
        py::arg("diagram"), py::arg("engine") = "cd");
  m.def("w_so", [](const SpatialDiagram& d) { return w_so(d.base).str(); });
  m.def("w_sl", [](const SpatialDiagram& d) { return w_sl_extended(d.base).str(); });
  m.def("cellular_embedding_poly", [](const SpatialDiagram& d) { return cellular_embedding_poly(d.base).str(); });
  m.def("yamada",
        [](const SpatialDiagram& d, const std::string& v, bool mirror) { return yamada(d, variant_of(v), mirror).str(); },
        py::arg("diagram"), py::arg("variant") = "s", py::arg("mirror") = false);
  m.def("classify", [](const SpatialDiagram& d) {
    auto r = nonclassicality_report(d);
    py::dict out;
    out["rs"] = r.rs.str();
    out["rf"] = r.rf.str();
    out["distinct"] = r.distinct;
    out["cubic"] = r.cubic;
    out["verdict"] = r.verdict;
    return out;
  });
  m.def(
      "obstruction",
      [](const SpatialDiagram& d, bool integral) { return (integral ? obstruction_z(d) : obstruction_z2(d)).str(); },
      py::arg("diagram"), py::arg("integral") = false);
  m.def("golden", [](const SpatialDiagram& d) { return golden_identity_check(d); });
  m.def("gram_det", [](int n) { return gram_det(n).str(); }, py::arg("n"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
