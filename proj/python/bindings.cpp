#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmdc/assignment.hpp"
#include "mmdc/errors.hpp"
#include "mmdc/expanded_graph.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/hungarian.hpp"
#include "mmdc/io.hpp"
#include "mmdc/oracle.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

mmdc::Instance make_instance(const std::vector<std::vector<mmdc::Cost>>& weights,
                             std::vector<int> demand_a, std::vector<int> cap_a,
                             std::vector<int> demand_b, std::vector<int> cap_b) {
  if (weights.empty()) throw std::invalid_argument("weights must have at least one row");
  const int s = static_cast<int>(weights.size());
  const int t = static_cast<int>(weights.front().size());
  std::vector<mmdc::Cost> flat;
  flat.reserve(static_cast<std::size_t>(s) * t);
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != t) throw std::invalid_argument("weights must be rectangular");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return mmdc::Instance(s, t, std::move(flat), std::move(demand_a), std::move(cap_a),
                        std::move(demand_b), std::move(cap_b));
}

std::vector<std::vector<mmdc::Cost>> weight_rows(const mmdc::Instance& inst) {
  std::vector<std::vector<mmdc::Cost>> rows(inst.s(), std::vector<mmdc::Cost>(inst.t()));
  for (int i = 0; i < inst.s(); ++i)
    for (int j = 0; j < inst.t(); ++j) rows[i][j] = inst.weight(i, j);
  return rows;
}

py::dict report_to_dict(const mmdc::FeasibilityReport& report) {
  py::dict checks;
  for (const auto& c : report.checks) checks[py::str(c.name)] = py::make_tuple(c.passed, c.offenders);
  return py::dict("passed"_a = report.passed(), "checks"_a = checks);
}

py::dict oracle_to_dict(const mmdc::OracleResult& r) {
  return py::dict("cost"_a = r.cost, "witness"_a = r.witness, "states"_a = r.states);
}

}  // namespace

PYBIND11_MODULE(_mmdc, m) {
  m.doc() = "Minimum-cost many-to-many matching with demands and capacities";

  static py::exception<mmdc::InfeasibleInstance> infeasible(m, "InfeasibleInstance");
  py::register_exception<mmdc::RejectedInstance>(m, "RejectedInstance", PyExc_ValueError);
  py::register_exception<mmdc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<mmdc::BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mmdc::InfeasibleInstance& e) {
      py::object exc = py::handle(infeasible)(e.what());
      exc.attr("root") = e.root();
      exc.attr("hall_violator") = e.hall_violator();
      PyErr_SetObject(infeasible.ptr(), exc.ptr());
    }
  });

  py::class_<mmdc::Instance>(m, "Instance")
      .def(py::init(&make_instance), "weights"_a, "demand_a"_a, "cap_a"_a, "demand_b"_a, "cap_b"_a)
      .def_property_readonly("s", &mmdc::Instance::s)
      .def_property_readonly("t", &mmdc::Instance::t)
      .def_property_readonly("weights", &weight_rows)
      .def_property_readonly("demand_a", &mmdc::Instance::demand_a)
      .def_property_readonly("cap_a", &mmdc::Instance::cap_a)
      .def_property_readonly("demand_b", &mmdc::Instance::demand_b)
      .def_property_readonly("cap_b", &mmdc::Instance::cap_b)
      .def("__eq__", [](const mmdc::Instance& a, const mmdc::Instance& b) { return a == b; })
      .def("__repr__", [](const mmdc::Instance& inst) {
        return "<Instance s=" + std::to_string(inst.s()) + " t=" + std::to_string(inst.t()) + ">";
      });

  py::class_<mmdc::Solution>(m, "Solution")
      .def_readonly("multiplicities", &mmdc::Solution::multiplicities)
      .def_readonly("total_cost", &mmdc::Solution::total_cost)
      .def_property_readonly("stats", [](const mmdc::Solution& s) {
        const auto& st = s.stats;
        return py::dict("augmentations"_a = st.augmentations, "label_updates"_a = st.label_updates,
                        "path_vertex_histogram"_a = st.path_vertex_histogram,
                        "wall_seconds"_a = st.wall_seconds, "aux_elements"_a = st.aux_elements,
                        "matched_edges"_a = st.matched_edges);
      });

  m.def("validate_instance", [](const mmdc::Instance& inst) {
    return report_to_dict(mmdc::validate_instance(inst));
  });

  m.def(
      "verify_solution",
      [](const mmdc::Instance& inst, const std::map<mmdc::Pair, int>& multiplicities,
         mmdc::Cost total_cost, const std::string& semantics) {
        mmdc::Solution sol;
        sol.multiplicities = multiplicities;
        sol.total_cost = total_cost;
        const auto mode = semantics == "declared" ? mmdc::Semantics::DeclaredMmdc
                                                  : mmdc::Semantics::ExpandedSaturating;
        return report_to_dict(mmdc::verify_solution(inst, sol, mode));
      },
      "instance"_a, "multiplicities"_a, "total_cost"_a, "semantics"_a = "expanded");

  m.def(
      "solve",
      [](const mmdc::Instance& inst, std::optional<std::uint64_t> seed_order) {
        mmdc::SolveOptions options;
        options.root_order_seed = seed_order;
        py::gil_scoped_release release;
        return mmdc::solve_mmdc(inst, options);
      },
      "instance"_a, "seed_order"_a = py::none(),
      "Solve with the capacity-aware Hungarian method on the expanded graph.");

  m.def(
      "solve_certified",
      [](const mmdc::Instance& inst) {
        const mmdc::ExpandedGraph g(inst);
        const auto r = mmdc::solve_expanded(g);
        mmdc::Solution sol;
        sol.multiplicities = mmdc::extract_original_matching(g, r.matching);
        sol.total_cost = mmdc::evaluate_cost(inst, sol);
        sol.stats = r.stats;
        return py::make_tuple(sol, mmdc::certificate_check(g, r.labels, r.matching));
      },
      "instance"_a, "Solve and also return whether the dual certificate holds.");

  m.def(
      "oracle_expanded",
      [](const mmdc::Instance& inst, std::int64_t max_states) {
        mmdc::OracleBudget budget;
        budget.max_states = max_states;
        return oracle_to_dict(mmdc::oracle_expanded(mmdc::ExpandedGraph(inst), budget));
      },
      "instance"_a, "max_states"_a = mmdc::OracleBudget{}.max_states);

  m.def(
      "oracle_declared",
      [](const mmdc::Instance& inst, std::optional<int> pair_cap, std::int64_t max_states) {
        mmdc::OracleBudget budget;
        budget.max_states = max_states;
        return oracle_to_dict(mmdc::oracle_declared_mmdc(inst, pair_cap, budget));
      },
      "instance"_a, "pair_cap"_a = 3, "max_states"_a = mmdc::OracleBudget{}.max_states);

  m.def("parse_instance", [](const std::string& text) { return mmdc::parse_instance(text); });
  m.def("write_instance", &mmdc::write_instance);
  m.def("write_solution", &mmdc::write_solution, "solution"_a, "include_stats"_a = true);

  m.def(
      "generate_instance",
      [](int s, int t, std::uint64_t seed, mmdc::Cost wmax, int capmax) {
        return mmdc::generate_instance({s, t, seed, wmax, capmax});
      },
      "s"_a, "t"_a, "seed"_a = 1, "wmax"_a = 100, "capmax"_a = 3);

  m.def(
      "solve_assignment_basic",
      [](const std::vector<std::vector<mmdc::Cost>>& weights, bool maximize) {
        const auto r = mmdc::solve_assignment_basic(weights, maximize);
        return py::make_tuple(r.row_to_col, r.value);
      },
      "weights"_a, "maximize"_a = false);
}
