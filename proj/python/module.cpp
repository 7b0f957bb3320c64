#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncilab/analysis.hpp"
#include "ncilab/betti.hpp"
#include "ncilab/error.hpp"
#include "ncilab/json_io.hpp"
#include "ncilab/matching.hpp"
#include "ncilab/monomial_ideal.hpp"
#include "ncilab/selftest.hpp"

namespace py = pybind11;
using namespace ncilab;

namespace {

py::object to_python(const Json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

Json from_python(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Json::parse(o.cast<std::string>());
  py::object dumps = py::module_::import("json").attr("dumps");
  return Json::parse(dumps(o).cast<std::string>());
}

Budget budget_of(std::size_t max_vars, std::uint64_t max_subsets) {
  Budget b;
  b.max_vars = max_vars;
  b.max_subsets = max_subsets;
  return b;
}

std::map<std::pair<int, int>, std::int64_t> betti(const std::string& ideal, const std::string& subject,
                                                  unsigned characteristic, std::size_t max_vars) {
  BettiOptions options;
  options.subject = subject_from_string(subject);
  options.characteristic = characteristic;
  options.budget.max_vars = max_vars;
  BettiTable t;
  {
    py::gil_scoped_release release;
    t = betti_table(parse_ideal(ideal), options);
  }
  return t.entries();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Squarefree monomial ideals, NCI detection and Betti tables";

  static auto* error = new py::object(py::exception<Error>(m, "NcilabError"));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = (*error)(std::string(e.name()) + ": " + e.what());
      exc.attr("kind") = std::string(e.name());
      PyErr_SetObject(error->ptr(), exc.ptr());
    }
  });

  m.attr("REFERENCE_NCI") = std::string(kReferenceNci);

  m.def("normalize", [](const std::string& ideal) { return render(parse_ideal(ideal)); },
        py::arg("ideal"), "Minimal generators, sorted by degree then label.");
  m.def("status", [](const std::string& ideal) {
        return verdict_json(input_from_ideal(ideal))["status"].get<std::string>();
      },
        py::arg("ideal"), "\"CI\", \"NCI\" or \"NEITHER\".");
  m.def("check", [](const std::string& ideal) { return to_python(verdict_json(input_from_ideal(ideal))); },
        py::arg("ideal"));
  m.def("invert", [](const std::string& ideal, const std::string& at) {
        return to_python(invert_json(input_from_ideal(ideal), at));
      },
        py::arg("ideal"), py::arg("at"));
  m.def("join", [](const std::string& ideal) { return to_python(join_json(input_from_ideal(ideal))); },
        py::arg("ideal"));
  m.def("betti", &betti, py::arg("ideal"), py::arg("subject") = "IDEAL", py::arg("characteristic") = 0,
        py::arg("max_vars") = 16, "Graded Betti numbers keyed by (i, j).");
  m.def("render_betti", [](const std::string& ideal, const std::string& subject) {
        return render_table(betti_table(parse_ideal(ideal), subject_from_string(subject)));
      },
        py::arg("ideal"), py::arg("subject") = "IDEAL");
  m.def("decompose", [](const std::string& ideal) {
        return to_python(decompose_json(input_from_ideal(ideal), Budget{}));
      },
        py::arg("ideal"));
  m.def("bounds", [](const std::string& ideal) {
        return to_python(bounds_json(input_from_ideal(ideal), Budget{}));
      },
        py::arg("ideal"));
  m.def("matching", [](const std::string& ideal) {
        const Hypergraph g = to_hypergraph(parse_ideal(ideal));
        return py::make_tuple(matching_number(g), ind_match(g), min_match(g));
      },
        py::arg("ideal"), "(matching number, ind-match, min-match) of a graph.");
  m.def("gn_family", [](int n) { return render(to_ideal(gn_family(n))); }, py::arg("n"));
  m.def("analyze", [](const py::object& request, std::size_t max_vars, std::uint64_t max_subsets) {
        return to_python(analyze(from_python(request), budget_of(max_vars, max_subsets)));
      },
        py::arg("request"), py::arg("max_vars") = 16, py::arg("max_subsets") = 65536,
        "Runs an analysis request (dict or JSON text) and returns the response dict.");
  m.def("selftest", [](bool quick) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& r : run_selftest(quick)) out.emplace_back(r.name, r.passed);
        return out;
      },
        py::arg("quick") = true);
}
