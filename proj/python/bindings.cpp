#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdequad/benchmarks.hpp"
#include "pdequad/parser.hpp"
#include "pdequad/report.hpp"
#include "pdequad/verifier.hpp"

namespace py = pybind11;
using namespace pdequad;

namespace {

std::string quadratize(const std::string& source, const std::string& heuristic, int max_aux,
                       std::optional<int> diff_order, std::optional<int> max_aux_deriv,
                       bool shrink, bool auto_mode, std::optional<std::size_t> node_limit,
                       std::optional<double> time_limit, std::optional<std::string> benchmark) {
  auto kind = parse_heuristic(heuristic);
  if (!kind) throw py::value_error("unknown heuristic '" + heuristic + "'");
  RunOptions opts;
  opts.auto_mode = auto_mode;
  opts.search.heuristic.kind = *kind;
  opts.search.max_aux = max_aux;
  opts.search.diff_order = diff_order;
  opts.search.max_aux_deriv = max_aux_deriv;
  opts.search.shrink = shrink;
  opts.search.node_limit = node_limit;
  if (time_limit) {
    opts.search.time_limit = std::chrono::milliseconds(static_cast<long long>(*time_limit * 1000));
  }
  ExtendedSystem root = polynomialize(parse_source(source).system);
  QuadResult r;
  {
    py::gil_scoped_release release;
    r = auto_mode ? auto_search(root, opts.search) : search(root, opts.search);
  }
  return make_report({source, benchmark}, opts, root, r).dump();
}

py::dict verify_set(const std::string& source, const std::vector<std::string>& aux,
                    std::optional<int> k) {
  ExtendedSystem root = polynomialize(parse_source(source).system);
  std::vector<Monomial> w;
  for (const Monomial& m : aux_monomials(root, aux)) {
    if (!(m.is_variable() && m.factors()[0].var.is_aux())) w.push_back(m);
  }
  ExtendedSystem sys = root.extend(w);
  int order = k.value_or(3 * root.order_h());
  VerifyOutcome r = verify(sys, order);
  py::dict out;
  out["success"] = r.success;
  out["diff_order"] = order;
  std::vector<std::string> rem;
  for (const auto& p : r.remainders) rem.push_back(to_string(p, sys.names()));
  out["remainders"] = rem;
  out["quadratic_system"] =
      r.success ? render_quadratic_system(sys, r.forms) : std::vector<std::string>{};
  return out;
}

py::list benchmarks() {
  py::list out;
  for (const auto& c : benchmark_cases()) {
    py::dict d;
    d["name"] = c.name;
    d["title"] = c.title;
    d["source"] = c.source;
    d["expected_order"] = c.expected_order;
    d["expected_aux"] = c.expected_aux;
    d["heavy"] = c.heavy;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = "1.0.0";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  m.def("quadratize_json", &quadratize, py::arg("source"), py::arg("heuristic") = "h3",
        py::arg("max_aux") = 8, py::arg("diff_order") = py::none(),
        py::arg("max_aux_deriv") = py::none(), py::arg("shrink") = true,
        py::arg("auto") = false, py::arg("node_limit") = py::none(),
        py::arg("time_limit") = py::none(), py::arg("benchmark") = py::none());
  m.def("verify_set", &verify_set, py::arg("source"), py::arg("aux"),
        py::arg("k") = py::none());
  m.def("benchmarks", &benchmarks);
}
