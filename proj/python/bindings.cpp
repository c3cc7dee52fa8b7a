#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sftkit/cohomology.hpp"
#include "sftkit/flow.hpp"
#include "sftkit/groupoid.hpp"
#include "sftkit/invariants.hpp"
#include "sftkit/io.hpp"
#include "sftkit/pipeline.hpp"

namespace py = pybind11;
using namespace sftkit;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::shared_ptr<const Presentation> presentation_of(const py::object& source) {
  if (py::isinstance<py::str>(source)) return share(load_presentation(source.cast<std::string>()));
  return share(build_presentation(source.cast<Matrix>()));
}

CylinderFunction function_of(const std::shared_ptr<const Presentation>& P, const std::string& spec,
                             const std::string& name) {
  if (spec.rfind("fn ", 0) == 0) return find_function(parse_functions(spec, P), name, "<text>");
  if (spec.rfind("const:", 0) == 0 || spec.rfind("table:", 0) == 0) return function_from_spec(spec, P);
  return find_function(load_functions(spec, P), name, spec);
}

py::object invariants(const py::object& source) { return to_python(to_json(bowen_franks(*presentation_of(source)))); }

std::vector<std::string> words(const py::object& source, std::size_t length) {
  std::vector<std::string> out;
  for (const auto& w : language(*presentation_of(source), length)) out.push_back(format_word(w));
  return out;
}

py::object potential(const py::object& source, const std::string& fn, const std::string& name) {
  const auto P = presentation_of(source);
  const auto W = transition_graph(function_of(P, fn, name));
  const auto result = find_potential(W);
  if (const auto* p = std::get_if<Potential>(&result)) {
    json kappa = json::object();
    for (std::size_t v = 0; v < W.node_count; ++v) kappa[format_word(W.node_labels[v])] = p->kappa[v];
    return to_python({{"potential", kappa}});
  }
  return to_python({{"negative_cycle", to_json(W, std::get<NegativeCycleWitness>(result))}});
}

py::object positive(const py::object& source, const std::string& fn, const std::string& name) {
  const auto P = presentation_of(source);
  const auto f = function_of(P, fn, name);
  const auto result = class_is_positive(f);
  if (const auto* c = std::get_if<PositivityCertificate>(&result)) {
    return to_python({{"positive", true}, {"certificate", to_json(*c)}});
  }
  return to_python({{"positive", false}, {"negative_cycle", to_json(transition_graph(f), std::get<NegativeCycleWitness>(result))}});
}

py::object pipeline(const std::string& oe, std::size_t samples, std::uint64_t seed, std::size_t depth,
                    std::size_t max_cycle, bool scoe, bool repair) {
  const auto h = load_orbit_equivalence(oe);
  PipelineOptions options;
  options.max_depth = depth;
  options.max_cycle = max_cycle;
  options.scoe = scoe;
  options.repair = repair;
  const auto result = coe_to_flow_pipeline(h, options);
  Rng rng(seed);
  std::vector<BiPoint> xs, ys;
  for (std::size_t i = 0; i < samples; ++i) xs.push_back(random_bipoint(h.domain(), rng, 4, 3));
  for (std::size_t i = 0; i < samples; ++i) ys.push_back(random_bipoint(h.codomain(), rng, 4, 3));
  ClaimOptions claim_options;
  claim_options.max_cycle = max_cycle;
  const auto report = verify_flow_claims(result.data, xs, claim_options, ys);
  return to_python({{"flow_data", to_json(result.data)}, {"coe", to_json(result.report)}, {"claims", to_json(report)}});
}

py::object groupoid_element(const std::string& x, std::int64_t n, const std::string& y) {
  return to_python(to_json(make_element(parse_point(x), n, parse_point(y))));
}

}  // namespace

PYBIND11_MODULE(_sftkit, m) {
  m.doc() = "Shifts of finite type, cocycles and flow equivalence";

  py::exception<Error>(m, "SftkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const auto type = py::module_::import("sftkit._sftkit").attr("SftkitError");
      auto instance = type(e.what());
      instance.attr("kind") = to_string(e.kind());
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  m.def("invariants", &invariants, py::arg("sft"), "Smith normal form and determinant of I - A");
  m.def("language", &words, py::arg("sft"), py::arg("length"), "Admissible words of the given length");
  m.def("potential", &potential, py::arg("sft"), py::arg("fn"), py::arg("name") = "",
        "Potential or negative cycle for a weight function");
  m.def("positive", &positive, py::arg("sft"), py::arg("fn"), py::arg("name") = "",
        "Positivity certificate or negative cycle for a cylinder function");
  m.def("pipeline", &pipeline, py::arg("oe"), py::arg("samples") = 8, py::arg("seed") = 1, py::arg("depth") = 8,
        py::arg("max_cycle") = 6, py::arg("scoe") = false, py::arg("repair") = false,
        "Flow equivalence data and claim checks for an orbit equivalence file");
  m.def("groupoid_element", &groupoid_element, py::arg("x"), py::arg("n"), py::arg("y"),
        "Canonical form of the groupoid element (x, n, y)");
  m.def("least_period", [](const std::string& point) { return least_period(parse_point(point)); }, py::arg("point"));
  m.def("normalize_point", [](const std::string& point) { return format_point(parse_point(point)); },
        py::arg("point"));
}
