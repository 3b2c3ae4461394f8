#include <doctest.h>

#include "mmdc/errors.hpp"
#include "mmdc/expanded_graph.hpp"
#include "mmdc/oracle.hpp"
#include "test_support.hpp"

using namespace mmdc;
using mmdc::testing::make_instance;
using mmdc::testing::uniform_bounds;

TEST_CASE("oracle_expanded examples") {
  CHECK(oracle_expanded(ExpandedGraph(uniform_bounds({{5}}, 1))).cost == 5);

  const auto r = oracle_expanded(ExpandedGraph(make_instance({{2}, {3}}, {1, 1}, {1, 1}, {1}, {2})));
  CHECK(r.cost == 5);
  CHECK(r.witness == std::map<Pair, int>{{{0, 0}, 1}, {{1, 0}, 1}});
  CHECK(r.states <= 64);
}

TEST_CASE("oracle_expanded: forced infeasible instance") {
  const Instance inst = make_instance({{1}}, {2}, {2}, {1}, {1});
  CHECK_FALSE(validate_instance(inst).passed());
  const auto r = oracle_expanded(ExpandedGraph::unchecked(inst));
  CHECK_FALSE(r.feasible());
}

TEST_CASE("oracle_expanded refuses past its budget") {
  const Instance inst = uniform_bounds({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 2);
  OracleBudget tiny;
  tiny.max_states = 10;
  CHECK_THROWS_AS(oracle_expanded(ExpandedGraph(inst), tiny), BudgetExceeded);
}

TEST_CASE("oracle_declared_mmdc examples") {
  CHECK(oracle_declared_mmdc(uniform_bounds({{5}}, 1), 3).cost == 5);

  const Instance loose = make_instance({{1, 2}, {3, 4}}, {1, 1}, {2, 2}, {1, 1}, {2, 2});
  const auto declared = oracle_declared_mmdc(loose, 1);
  CHECK(declared.cost == 5);
  const auto expanded = oracle_expanded(ExpandedGraph(loose));
  REQUIRE(expanded.feasible());
  CHECK(*expanded.cost >= *declared.cost);
  // Saturating both sides uses all four pairs once.
  CHECK(*expanded.cost == 10);
}

TEST_CASE("oracle_declared_mmdc: zero demands give the empty matching") {
  const Instance inst = make_instance({{4, 1}, {2, 7}}, {0, 0}, {3, 2}, {0, 0}, {1, 3});
  const auto r = oracle_declared_mmdc(inst, std::nullopt);
  CHECK(r.cost == 0);
  CHECK(r.witness.empty());
}

TEST_CASE("oracle_declared_mmdc: empty feasible set") {
  // a_1 needs 2 matches, b_1 allows at most 1 and pair_cap 1 limits repeats.
  const auto r = oracle_declared_mmdc(make_instance({{1}}, {2}, {2}, {0}, {1}), 1);
  CHECK_FALSE(r.feasible());
}

TEST_CASE("oracle_expanded is independent of enumeration order") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = mmdc::testing::random_small_instance(rng, 2, 2, 5);
    if (!validate_instance(inst).passed()) continue;
    const ExpandedGraph g(inst);
    const auto base = oracle_expanded(g);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      CHECK(oracle_expanded(g, {}, seed).cost == base.cost);
    }
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("compare_solvers on the classical sub-case and with B slack") {
  const auto classic = compare_solvers(uniform_bounds({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}}, 1));
  CHECK(classic.solver_matches_expanded);
  CHECK(classic.solver_cost == classic.expanded_cost);
  CHECK(classic.declared_cost == classic.expanded_cost);
  CHECK(classic.saturation_gap == 0);

  const auto slack = compare_solvers(make_instance({{1, 2}, {3, 4}}, {1, 1}, {2, 2}, {1, 1}, {2, 2}));
  CHECK(slack.solver_matches_expanded);
  REQUIRE(slack.saturation_gap.has_value());
  CHECK(*slack.saturation_gap >= 0);
  CHECK(*slack.saturation_gap == 5);
  CHECK_FALSE(slack.path_vertex_histogram.empty());
}
