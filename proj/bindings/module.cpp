// Thin string-level bindings: tangles travel as codec text, polynomials as
// canonical text or JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wriggle/codec.hpp"
#include "wriggle/invariants.hpp"
#include "wriggle/moves.hpp"
#include "wriggle/vassiliev.hpp"

namespace py = pybind11;

namespace {

wriggle::TangleDiagram classical(const std::string& text) {
  wriggle::ParsedTangle parsed = wriggle::parse_tangle(text);
  if (std::holds_alternative<wriggle::SingularTangle>(parsed)) {
    throw wriggle::Error("expected a classical diagram, got a singular one");
  }
  return std::get<wriggle::TangleDiagram>(parsed);
}

wriggle::SingularTangle singular(const std::string& text) {
  wriggle::ParsedTangle parsed = wriggle::parse_tangle(text);
  if (auto* diagram = std::get_if<wriggle::TangleDiagram>(&parsed)) {
    return wriggle::as_singular(*diagram);
  }
  return std::get<wriggle::SingularTangle>(parsed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gauss-code virtual tangles and the self-crossing wriggle polynomial";

  // Translators run newest-first, so the base class must be registered
  // before the derived one or it would shadow it.
  py::register_exception<wriggle::Error>(m, "TangleError", PyExc_RuntimeError);
  py::register_exception<wriggle::SyntaxError>(m, "TangleSyntaxError", PyExc_ValueError);

  m.def("validate", [](const std::string& text) {
    std::vector<std::string> problems;
    for (const auto& violation : wriggle::parse_tangle_lenient(text).report.violations) {
      problems.push_back(wriggle::to_string(violation));
    }
    return problems;
  }, py::arg("text"), "Problems with the tangle text; empty means valid.");

  m.def("canonical", [](const std::string& text) {
    return wriggle::serialize_tangle(wriggle::parse_tangle(text));
  }, py::arg("text"), "Canonical serialization (ids relabeled, spacing normalized).");

  m.def("self_crossing_wriggle", [](const std::string& text) {
    return wriggle::polynomial_to_text(wriggle::self_crossing_wriggle(classical(text)));
  }, py::arg("text"), "Self-crossing wriggle polynomial, canonical text form.");

  m.def("self_crossing_wriggle_json", [](const std::string& text) {
    return wriggle::polynomial_to_json(wriggle::self_crossing_wriggle(classical(text)));
  }, py::arg("text"), "Self-crossing wriggle polynomial as a JSON term array.");

  m.def("writhe", [](const std::string& text) {
    return wriggle::writhe(classical(text));
  }, py::arg("text"));

  m.def("vlk", [](const std::string& text, int a, int b) {
    return wriggle::vlk(classical(text), a, b);
  }, py::arg("text"), py::arg("a"), py::arg("b"),
     "Virtual linking number: signed count of a-over-b crossings.");

  m.def("wriggle_number", [](const std::string& text, int a, int b) {
    return wriggle::wriggle_number(classical(text), a, b);
  }, py::arg("text"), py::arg("a"), py::arg("b"));

  m.def("scramble", [](const std::string& text, int moves, std::uint64_t seed) {
    return wriggle::serialize_tangle(wriggle::scramble(classical(text), moves, seed));
  }, py::arg("text"), py::arg("moves") = 20, py::arg("seed") = 1,
     "Apply seeded random Reidemeister moves.");

  m.def("random_tangle", [](int closed, int long_count, int crossings, std::uint64_t seed) {
    return wriggle::serialize_tangle(
        wriggle::random_tangle({closed, long_count, crossings}, seed));
  }, py::arg("closed") = 1, py::arg("long_components") = 0, py::arg("crossings") = 0,
     py::arg("seed") = 1);

  m.def("reverse", [](const std::string& text, int component) {
    return wriggle::serialize_tangle(wriggle::reverse_orientation(classical(text), component));
  }, py::arg("text"), py::arg("component") = 0);

  m.def("closure", [](const std::string& text) {
    return wriggle::serialize_tangle(wriggle::closure(classical(text)));
  }, py::arg("text"));

  m.def("connect", [](const std::string& top, const std::string& bottom) {
    const wriggle::ConnectedSum sum = wriggle::connected_sum(classical(top), classical(bottom));
    return py::make_tuple(wriggle::serialize_tangle(sum.diagram), sum.plan.sigma);
  }, py::arg("top"), py::arg("bottom"),
     "Stack top over bottom; returns (text, sigma) with sigma the gluing map.");

  m.def("extension", [](const std::string& text) {
    return wriggle::polynomial_to_text(wriggle::extension(singular(text)));
  }, py::arg("text"), "Vassiliev extension of a (possibly singular) tangle.");

  m.def("witness_search", [](int bound, int components) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const wriggle::Witness& witness : wriggle::order_witness_search(bound, components)) {
      out.push_back({wriggle::serialize_tangle(witness.tangle),
                     wriggle::polynomial_to_text(witness.value)});
    }
    return out;
  }, py::arg("bound") = 3, py::arg("components") = 1,
     "Exhaustive nonzero 1-double-point witnesses up to the crossing bound.");
}
