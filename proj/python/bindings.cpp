#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "throttlekit/bounds.hpp"
#include "throttlekit/gambler.hpp"
#include "throttlekit/generators.hpp"
#include "throttlekit/io.hpp"
#include "throttlekit/serialize.hpp"
#include "throttlekit/solvers.hpp"
#include "throttlekit/strategies.hpp"
#include "throttlekit/sweep.hpp"

namespace py = pybind11;
using namespace throttle;

// Structured results cross the boundary as JSON text; the Python package
// decodes them into dicts.

namespace {

SolverOptions solver_options(std::uint64_t budget, std::optional<int> k_max) {
  SolverOptions o;
  o.state_budget = budget;
  o.k_max = k_max;
  return o;
}

CoverPlan make_plan(const Graph& g, const std::string& planner, double c) {
  if (planner == "cover") return plan_cover(g, c);
  if (planner == "spider") return spider_cover(g);
  if (planner == "cactus") return cactus_plan(g);
  throw PreconditionError("unknown planner '" + planner + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "throttlekit native core";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](Vertex n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("family", [](const std::string& spec) { return generate(FamilySpec::parse(spec)); })
      .def_static("from_graph6", [](const std::string& text) { return parse_graph(text, GraphFormat::graph6); })
      .def_static("from_edge_list", [](const std::string& text) { return parse_graph(text, GraphFormat::edge_list); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def("edge_list", [](const Graph& g) { return emit_edge_list(g); })
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "solve",
      [](const Graph& g, const std::string& objective, std::uint64_t budget, std::optional<int> k_max) {
        ThrottleResult r;
        {
          py::gil_scoped_release release;
          r = solve(g, objective_from_string(objective), solver_options(budget, k_max));
        }
        return nlohmann::json(r).dump();
      },
      py::arg("g"), py::arg("objective") = "robber", py::arg("state_budget") = SolverOptions{}.state_budget,
      py::arg("k_max") = py::none());
  m.def(
      "capture_time",
      [](const Graph& g, int k, std::uint64_t budget) {
        return capture_time(g, k, solver_options(budget, std::nullopt)).rounds;
      },
      py::arg("g"), py::arg("k"), py::arg("state_budget") = SolverOptions{}.state_budget);
  m.def("psd_prop_time", [](const Graph& g, const VertexSet& s) { return psd_prop_time(g, make_vertex_set(s)).rounds; });
  m.def("k_radius", [](const Graph& g, int k) { return k_radius(g, k); });

  m.def(
      "plan",
      [](const Graph& g, const std::string& planner, double c) { return nlohmann::json(make_plan(g, planner, c)).dump(); },
      py::arg("g"), py::arg("planner") = "cover", py::arg("c") = 0.5);
  m.def(
      "certify",
      [](const Graph& g, const std::string& planner, double c) {
        return nlohmann::json(certify(g, make_plan(g, planner, c), c)).dump();
      },
      py::arg("g"), py::arg("planner") = "cover", py::arg("c") = 0.5);
  m.def("flatten", [](const Graph& g) { return nlohmann::json(cactus_flatten(g)).dump(); });
  m.def(
      "upper_bound",
      [](Vertex n, const std::string& family, std::optional<int> k_cycles, std::optional<double> c) {
        return nlohmann::json(upper_bound(n, bound_family_from_string(family), k_cycles, c)).dump();
      },
      py::arg("n"), py::arg("family"), py::arg("k_cycles") = py::none(), py::arg("c") = py::none());

  m.def("path_throttle_formula", &path_throttle_formula);
  m.def("lower_family_a", &lower_family_a);
  m.def("lower_bound", [](std::int64_t n) { return lower_bound_eval(spider_lower_family(n)); });
  m.def("gambler_bound", [](std::int64_t n, const std::string& variant) {
    return gambler_bound(n, gambler_variant_from_string(variant));
  });

  m.def(
      "simulate_camping",
      [](const Graph& g, const std::vector<double>& p, const VertexSet& cops, std::int64_t trials, std::uint64_t seed,
         int jobs) {
        SimulationOptions o;
        o.jobs = jobs;
        EctEstimate est;
        {
          py::gil_scoped_release release;
          est = simulate_gambler(g, {p, GamblerVariant::unknown}, camping_policy(make_vertex_set(cops)), trials, seed, o);
        }
        return nlohmann::json(est).dump();
      },
      py::arg("g"), py::arg("p"), py::arg("cops"), py::arg("trials"), py::arg("seed"), py::arg("jobs") = 1);

  m.def(
      "sweep",
      [](const std::string& kind, const std::vector<std::int64_t>& ns, int seeds, std::uint64_t seed, double c) {
        SweepConfig cfg;
        cfg.kind = sweep_kind_from_string(kind);
        cfg.ns = ns;
        cfg.seeds = seeds;
        cfg.seed = seed;
        cfg.c = c;
        return run_sweep(cfg);
      },
      py::arg("kind"), py::arg("ns"), py::arg("seeds") = 1, py::arg("seed") = 1, py::arg("c") = 0.5);
}
