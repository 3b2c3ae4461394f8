#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mmdc/expanded_graph.hpp"
#include "mmdc/instance.hpp"

namespace mmdc {

struct OracleBudget {
  std::int64_t max_states = 50'000'000;
  std::chrono::milliseconds timeout{60'000};
};

struct OracleResult {
  /// nullopt: no matching satisfies the constraints
  std::optional<Cost> cost;
  std::map<Pair, int> witness;
  std::int64_t states = 0;

  bool feasible() const noexcept { return cost.has_value(); }
};

/// Exhaustive search over subsets of expanded edges that saturate every
/// vertex capacity; returns the minimum original cost (A'-C edges cost 0).
/// `edge_order_seed` permutes the enumeration order. Throws BudgetExceeded.
OracleResult oracle_expanded(const ExpandedGraph& g, const OracleBudget& budget = {},
                             std::optional<std::uint64_t> edge_order_seed = std::nullopt);

/// Exhaustive search over multiplicity matrices with
/// 0 <= m_ij <= pair_cap, demand_a <= row sums <= cap_a and
/// demand_b <= column sums <= cap_b. nullopt pair_cap means unbounded.
OracleResult oracle_declared_mmdc(const Instance& inst, std::optional<int> pair_cap = 3,
                                  const OracleBudget& budget = {});

struct SolverComparison {
  std::optional<Cost> solver_cost;
  std::optional<Cost> expanded_cost;
  std::optional<Cost> declared_cost;
  bool solver_matches_expanded = false;
  /// expanded - declared, when both are feasible
  std::optional<Cost> saturation_gap;
  std::map<int, std::int64_t> path_vertex_histogram;
};

/// Runs solve_mmdc and both oracles (declared with pair_cap 3) on one instance.
/// Infeasibility on both the solver and the expanded oracle counts as a match.
SolverComparison compare_solvers(const Instance& inst, const OracleBudget& budget = {});

}  // namespace mmdc
