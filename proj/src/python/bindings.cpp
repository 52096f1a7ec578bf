#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latcd/canonical.hpp"
#include "latcd/cli.hpp"
#include "latcd/congruence.hpp"
#include "latcd/constructions.hpp"
#include "latcd/enumeration.hpp"
#include "latcd/lattice_json.hpp"
#include "latcd/structure.hpp"

namespace py = pybind11;
using namespace latcd;

namespace {

  py::object to_py(BigInt const& v) {
    return py::module_::import("builtins").attr("int")(v.str());
  }

  py::object to_py(Dyadic const& d) {
    auto Fraction = py::module_::import("fractions").attr("Fraction");
    auto one      = py::module_::import("builtins").attr("int")(1);
    return Fraction(to_py(d.mantissa()), one.attr("__lshift__")(d.exp()));
  }

  Dyadic from_py(py::handle frac) {
    return Dyadic::parse(py::str(frac).cast<std::string>());
  }

  py::dict analyze(Lattice const& L) {
    py::dict d;
    d["size"]           = L.size();
    d["canonical_code"] = canonical_form(L).hex();
    d["con_count"]      = to_py(con_count(L));
    d["density"]        = to_py(congruence_density(L));
    d["modular"]        = is_modular(L);
    d["semimodular"]    = is_semimodular(L);
    d["distributive"]   = is_distributive(L);
    d["skeleton_size"]  = skeleton(L).size();
    d["rno"]            = reducibility_number(L);
    d["gluing_edges"]   = gluing_edges(L);
    return d;
  }

}  // namespace

PYBIND11_MODULE(_latcd, m) {
  static py::exception<Error> error(m, "LatcdError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      error(e.what());
    }
  });

  py::class_<Lattice>(m, "Lattice")
      .def_static("from_covers",
                  [](std::size_t n, std::vector<Edge> const& covers) {
                    return Lattice::from_covers(n, covers);
                  })
      .def_property_readonly("size", &Lattice::size)
      .def_property_readonly("covers", &Lattice::covers)
      .def("leq", &Lattice::leq)
      .def("join", &Lattice::join)
      .def("meet", &Lattice::meet)
      .def("__len__", &Lattice::size)
      .def("__repr__",
           [](Lattice const& L) {
             return "<Lattice size=" + std::to_string(L.size()) + " code="
                    + canonical_form(L).hex() + ">";
           });

  m.def("construct", &construct_from_term, py::arg("term"));
  m.def("from_json", &lattice_from_json);
  m.def("to_json", &lattice_to_json);
  m.def("chain", &chain);
  m.def("boolean4", &boolean4);
  m.def("m_k", &m_k);
  m.def("n_k", &n_k);
  m.def("l_k_n", &l_k_n);
  m.def("glued_sum", &glued_sum);
  m.def("direct_product", &direct_product);
  m.def("one_point_extension", &one_point_extension);
  m.def("dual", &dual);
  m.def("core", [](Lattice const& L) { return core(L); });

  m.def("canonical_code", [](Lattice const& L) { return canonical_form(L).hex(); });
  m.def("is_isomorphic", &is_isomorphic);
  m.def("con_count", [](Lattice const& L) { return to_py(con_count(L)); });
  m.def("density", [](Lattice const& L) { return to_py(congruence_density(L)); });
  m.def("analyze", &analyze);

  m.def(
      "enumerate",
      [](std::size_t n, std::string const& cls, std::size_t budget) {
        return enumerate_lattices(n, parse_lattice_class(cls), budget);
      },
      py::arg("n"), py::arg("cls") = "all", py::arg("budget") = kDefaultBudget);
  py::class_<Enumerated>(m, "Enumerated")
      .def_readonly("lattice", &Enumerated::lattice)
      .def_property_readonly("code", [](Enumerated const& e) { return e.code.hex(); });

  m.def(
      "scd",
      [](std::size_t max_size, std::string const& cls) {
        py::list out;
        for (auto const& e : scd(parse_lattice_class(cls), max_size)) {
          out.append(py::make_tuple(to_py(e.density), e.witness.hex(), e.witness_size));
        }
        return out;
      },
      py::arg("max_size"), py::arg("cls") = "all");
  m.def(
      "lnc",
      [](std::size_t n, std::size_t k, std::string const& cls) {
        return to_py(lnc(parse_lattice_class(cls), n, k));
      },
      py::arg("n"), py::arg("k"), py::arg("cls") = "all");
  m.def("k_of_p", [](py::handle p) { return k_of_p(from_py(p)); });
  m.def("f_of_p", [](py::handle p) { return f_of_p(from_py(p)); });

  m.def("run_cli", [](std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
