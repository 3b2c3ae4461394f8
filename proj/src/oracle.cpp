#include "mmdc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mmdc/errors.hpp"
#include "mmdc/hungarian.hpp"

namespace mmdc {

namespace {

class StateCounter {
 public:
  explicit StateCounter(const OracleBudget& budget)
      : budget_(budget), deadline_(std::chrono::steady_clock::now() + budget.timeout) {}

  void tick() {
    if (++states_ > budget_.max_states) {
      throw BudgetExceeded("oracle exceeded " + std::to_string(budget_.max_states) + " states");
    }
    if ((states_ & 0xFFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExceeded("oracle exceeded its time budget");
    }
  }
  std::int64_t states() const noexcept { return states_; }

 private:
  OracleBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::int64_t states_ = 0;
};

struct Edge {
  int x;
  int y;
  Cost cost;
};

class ExpandedSearch {
 public:
  ExpandedSearch(const ExpandedGraph& g, std::vector<Edge> edges, const OracleBudget& budget)
      : edges_(std::move(edges)),
        rem_x_(g.x_count()),
        rem_y_(g.y_count()),
        avail_x_(g.x_count(), 0),
        avail_y_(g.y_count(), 0),
        chosen_(edges_.size(), 0),
        counter_(budget) {
    for (int x = 0; x < g.x_count(); ++x) rem_x_[x] = g.cap_x(x);
    for (int y = 0; y < g.y_count(); ++y) rem_y_[y] = g.cap_y(y);
    for (const auto& e : edges_) {
      ++avail_x_[e.x];
      ++avail_y_[e.y];
    }
  }

  void run() {
    for (std::size_t x = 0; x < rem_x_.size(); ++x)
      if (rem_x_[x] > avail_x_[x]) return;
    for (std::size_t y = 0; y < rem_y_.size(); ++y)
      if (rem_y_[y] > avail_y_[y]) return;
    descend(0, 0);
  }

  std::optional<Cost> best() const { return best_; }
  const std::vector<char>& best_choice() const { return best_choice_; }
  std::int64_t states() const { return counter_.states(); }

 private:
  void descend(std::size_t k, Cost cost) {
    counter_.tick();
    if (best_ && cost >= *best_) return;
    if (k == edges_.size()) {
      best_ = cost;
      best_choice_ = chosen_;
      return;
    }
    const Edge& e = edges_[k];
    --avail_x_[e.x];
    --avail_y_[e.y];
    if (rem_x_[e.x] > 0 && rem_y_[e.y] > 0) {
      --rem_x_[e.x];
      --rem_y_[e.y];
      chosen_[k] = 1;
      descend(k + 1, cost + e.cost);
      chosen_[k] = 0;
      ++rem_x_[e.x];
      ++rem_y_[e.y];
    }
    if (rem_x_[e.x] <= avail_x_[e.x] && rem_y_[e.y] <= avail_y_[e.y]) descend(k + 1, cost);
    ++avail_x_[e.x];
    ++avail_y_[e.y];
  }

  std::vector<Edge> edges_;
  std::vector<int> rem_x_, rem_y_, avail_x_, avail_y_;
  std::vector<char> chosen_;
  std::vector<char> best_choice_;
  std::optional<Cost> best_;
  StateCounter counter_;
};

class DeclaredSearch {
 public:
  DeclaredSearch(const Instance& inst, std::optional<int> pair_cap, const OracleBudget& budget)
      : inst_(inst),
        pair_cap_(pair_cap),
        row_(inst.s(), 0),
        col_(inst.t(), 0),
        m_(static_cast<std::size_t>(inst.s()) * inst.t(), 0),
        counter_(budget) {}

  void run() { descend(0, 0); }

  std::optional<Cost> best() const { return best_; }
  const std::vector<int>& best_matrix() const { return best_m_; }
  std::int64_t states() const { return counter_.states(); }

 private:
  void descend(int cell, Cost cost) {
    counter_.tick();
    if (best_ && cost >= *best_) return;
    const int s = inst_.s();
    const int t = inst_.t();
    if (cell == s * t) {
      for (int j = 0; j < t; ++j)
        if (col_[j] < inst_.demand_b()[j]) return;
      best_ = cost;
      best_m_ = m_;
      return;
    }
    const int i = cell / t;
    const int j = cell % t;
    int upper = std::min(inst_.cap_a()[i] - row_[i], inst_.cap_b()[j] - col_[j]);
    if (pair_cap_) upper = std::min(upper, *pair_cap_);
    for (int v = 0; v <= upper; ++v) {
      row_[i] += v;
      col_[j] += v;
      m_[cell] = v;
      // Row i is complete after its last column.
      if (j + 1 < t || row_[i] >= inst_.demand_a()[i]) {
        descend(cell + 1, cost + static_cast<Cost>(v) * inst_.weight(i, j));
      }
      row_[i] -= v;
      col_[j] -= v;
    }
    m_[cell] = 0;
  }

  const Instance& inst_;
  std::optional<int> pair_cap_;
  std::vector<int> row_, col_, m_, best_m_;
  std::optional<Cost> best_;
  StateCounter counter_;
};

}  // namespace

OracleResult oracle_expanded(const ExpandedGraph& g, const OracleBudget& budget,
                             std::optional<std::uint64_t> edge_order_seed) {
  std::vector<Edge> edges;
  for (int x = 0; x < g.x_count(); ++x) {
    for (int y = 0; y < g.y_count(); ++y) {
      if (!g.has_edge(x, y)) continue;
      const auto pair = g.original_pair(x, y);
      edges.push_back({x, y, pair ? g.instance().weight(pair->first, pair->second) : 0});
    }
  }
  if (edge_order_seed) {
    std::mt19937_64 rng(*edge_order_seed);
    std::shuffle(edges.begin(), edges.end(), rng);
  }

  ExpandedSearch search(g, edges, budget);
  search.run();
  OracleResult result;
  result.states = search.states();
  result.cost = search.best();
  if (result.cost) {
    const auto& choice = search.best_choice();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!choice[k]) continue;
      if (auto pair = g.original_pair(edges[k].x, edges[k].y)) ++result.witness[*pair];
    }
  }
  return result;
}

OracleResult oracle_declared_mmdc(const Instance& inst, std::optional<int> pair_cap,
                                  const OracleBudget& budget) {
  DeclaredSearch search(inst, pair_cap, budget);
  search.run();
  OracleResult result;
  result.states = search.states();
  result.cost = search.best();
  if (result.cost) {
    const auto& m = search.best_matrix();
    for (int i = 0; i < inst.s(); ++i)
      for (int j = 0; j < inst.t(); ++j)
        if (int v = m[static_cast<std::size_t>(i) * inst.t() + j]; v > 0) result.witness[{i, j}] = v;
  }
  return result;
}

SolverComparison compare_solvers(const Instance& inst, const OracleBudget& budget) {
  SolverComparison report;
  const ExpandedGraph g(inst);
  try {
    Solution sol = solve_mmdc(inst);
    report.solver_cost = sol.total_cost;
    report.path_vertex_histogram = std::move(sol.stats.path_vertex_histogram);
  } catch (const InfeasibleInstance&) {
  }
  report.expanded_cost = oracle_expanded(g, budget).cost;
  report.declared_cost = oracle_declared_mmdc(inst, 3, budget).cost;
  report.solver_matches_expanded = report.solver_cost == report.expanded_cost;
  if (report.expanded_cost && report.declared_cost) {
    report.saturation_gap = *report.expanded_cost - *report.declared_cost;
  }
  return report;
}

}  // namespace mmdc
