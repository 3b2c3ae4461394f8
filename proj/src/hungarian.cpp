#include "mmdc/hungarian.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "mmdc/errors.hpp"

namespace mmdc {

namespace {

// Calls fn(y) for every Y-neighbour of x in ascending dense order.
template <typename Fn>
void for_each_neighbor(const ExpandedGraph& g, int x, Fn&& fn) {
  const int t = g.t();
  if (x < g.s()) {
    for (int y = 0; y < 2 * t; ++y) fn(y);
  } else {
    for (int y = 0; y < t; ++y) fn(y);
    for (int y = 2 * t; y < g.y_count(); ++y) fn(y);
  }
}

void erase_one(std::vector<int>& v, int value) {
  auto it = std::find(v.begin(), v.end(), value);
  v.erase(it);
}

// Adds x to S and folds its unmatched edges into the Y slacks.
void enter_s(const ExpandedGraph& g, const Labeling& l, const MatchState& m, AlternatingTree& tree,
             int x, int parent) {
  tree.in_s[x] = 1;
  tree.parent_of_x[x] = parent;
  tree.slack_x[x] = kInfiniteSlack;
  tree.s_members.push_back(x);

  const int mark = ++tree.scratch_epoch;
  for (int y : m.partners_of_x(x)) tree.scratch[y] = mark;

  const Cost lx = l.x[x];
  for_each_neighbor(g, x, [&](int y) {
    if (tree.in_t[y] || tree.scratch[y] == mark) return;
    const Cost slack = lx + l.y[y] - g.profit_unchecked(x, y);
    if (slack < tree.slack_y[y]) {
      tree.slack_y[y] = slack;
      tree.slack_y_from[y] = x;
    }
  });
}

// Adds a saturated y to T. Partners reached through a tight matched edge join
// S at once; the others wait on slack_x until a dual update makes them tight.
void enter_t(const ExpandedGraph& g, const Labeling& l, const MatchState& m, AlternatingTree& tree,
             int y) {
  tree.in_t[y] = 1;
  tree.parent_of_y[y] = tree.slack_y_from[y];
  tree.t_members.push_back(y);
  for (int x : m.partners_of_y(y)) {
    if (tree.in_s[x]) continue;
    const Cost reduced = g.profit_unchecked(x, y) - l.x[x] - l.y[y];
    if (reduced == 0) {
      enter_s(g, l, m, tree, x, y);
    } else if (reduced < tree.slack_x[x]) {
      tree.slack_x[x] = reduced;
      tree.slack_x_from[x] = y;
    }
  }
}

std::vector<VertexId> path_to(const ExpandedGraph& g, const AlternatingTree& tree, int free_y) {
  std::vector<VertexId> path;
  int y = free_y;
  int x = tree.slack_y_from[y];
  path.push_back(g.y_vertex(y));
  while (true) {
    path.push_back(g.x_vertex(x));
    if (x == tree.root) break;
    y = tree.parent_of_x[x];
    path.push_back(g.y_vertex(y));
    x = tree.parent_of_y[y];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

void require_x_side(VertexId v, const char* what) {
  if (!v.on_x_side()) throw ContractViolation(std::string(what) + ": " + v.name() + " is not in X");
}

}  // namespace

MatchState::MatchState(const ExpandedGraph& g) : by_x_(g.x_count()), by_y_(g.y_count()) {}

bool MatchState::contains(int x, int y) const {
  const auto& a = by_x_[x];
  const auto& b = by_y_[y];
  if (a.size() <= b.size()) return std::find(a.begin(), a.end(), y) != a.end();
  return std::find(b.begin(), b.end(), x) != b.end();
}

void MatchState::add(int x, int y) {
  if (contains(x, y)) throw ContractViolation("edge already matched");
  by_x_[x].push_back(y);
  by_y_[y].push_back(x);
  ++size_;
}

void MatchState::remove(int x, int y) {
  if (!contains(x, y)) throw ContractViolation("edge is not matched");
  erase_one(by_x_[x], y);
  erase_one(by_y_[y], x);
  --size_;
}

std::int64_t AlternatingTree::element_count() const {
  return static_cast<std::int64_t>(in_s.size() + in_t.size() + parent_of_x.size() +
                                   parent_of_y.size() + slack_y.size() + slack_y_from.size() +
                                   slack_x.size() + slack_x_from.size() + s_members.capacity() +
                                   t_members.capacity() + scratch.size());
}

Labeling initial_labeling(const ExpandedGraph& g) {
  Labeling l;
  l.y.assign(g.y_count(), 0);
  l.x.assign(g.x_count(), 0);
  for (int x = 0; x < g.x_count(); ++x) {
    Cost best = std::numeric_limits<Cost>::min();
    for_each_neighbor(g, x, [&](int y) { best = std::max(best, g.profit_unchecked(x, y)); });
    l.x[x] = best;
  }
  return l;
}

bool is_free(const ExpandedGraph& g, const MatchState& m, VertexId v) {
  return m.num(g, v) < g.cap(v);
}

AlternatingTree tree_init(const ExpandedGraph& g, const Labeling& l, const MatchState& m,
                          VertexId root) {
  require_x_side(root, "tree root");
  if (!is_free(g, m, root)) throw ContractViolation("tree root " + root.name() + " is not free");
  const auto nx = static_cast<std::size_t>(g.x_count());
  const auto ny = static_cast<std::size_t>(g.y_count());

  AlternatingTree tree;
  tree.root = g.x_index(root);
  tree.in_s.assign(nx, 0);
  tree.in_t.assign(ny, 0);
  tree.parent_of_x.assign(nx, -1);
  tree.parent_of_y.assign(ny, -1);
  tree.slack_y.assign(ny, kInfiniteSlack);
  tree.slack_y_from.assign(ny, -1);
  tree.slack_x.assign(nx, kInfiniteSlack);
  tree.slack_x_from.assign(nx, -1);
  tree.s_members.reserve(nx);
  tree.t_members.reserve(ny);
  tree.scratch.assign(ny, 0);
  enter_s(g, l, m, tree, tree.root, -1);
  return tree;
}

AlphaStep compute_alpha_l(const ExpandedGraph& g, const AlternatingTree& tree) {
  Cost best = kInfiniteSlack;
  std::optional<VertexId> witness;
  // X vertices precede Y vertices in the deterministic order.
  for (int x = 0; x < g.x_count(); ++x) {
    if (!tree.in_s[x] && tree.slack_x[x] < best) {
      best = tree.slack_x[x];
      witness = g.x_vertex(x);
    }
  }
  for (int y = 0; y < g.y_count(); ++y) {
    if (!tree.in_t[y] && tree.slack_y[y] < best) {
      best = tree.slack_y[y];
      witness = g.y_vertex(y);
    }
  }
  if (!witness) {
    std::vector<std::string> violator;
    for (int x = 0; x < g.x_count(); ++x)
      if (tree.in_s[x]) violator.push_back(display_name(g, g.x_vertex(x)));
    throw InfeasibleInstance(display_name(g, g.x_vertex(tree.root)), std::move(violator));
  }
  return {best, *witness};
}

void update_labels(Labeling& l, AlternatingTree& tree, Cost alpha) {
  if (alpha < 0) throw ContractViolation("label update step must be non-negative");
  if (alpha == 0) return;
  for (int x : tree.s_members) l.x[x] -= alpha;
  for (int y : tree.t_members) l.y[y] += alpha;
  for (std::size_t y = 0; y < tree.slack_y.size(); ++y)
    if (!tree.in_t[y] && tree.slack_y[y] != kInfiniteSlack) tree.slack_y[y] -= alpha;
  for (std::size_t x = 0; x < tree.slack_x.size(); ++x)
    if (!tree.in_s[x] && tree.slack_x[x] != kInfiniteSlack) tree.slack_x[x] -= alpha;
}

GrowOutcome grow_or_augment(const ExpandedGraph& g, Labeling& l, const MatchState& m,
                            AlternatingTree& tree) {
  for (int y = 0; y < g.y_count(); ++y) {
    if (tree.in_t[y] || tree.slack_y[y] != 0) continue;
    if (m.num_y(y) < g.cap_y(y)) {
      return {GrowOutcome::Kind::Augmenting, path_to(g, tree, y), 0};
    }
    enter_t(g, l, m, tree, y);
    return {GrowOutcome::Kind::Extended, {}, 0};
  }
  for (int x = 0; x < g.x_count(); ++x) {
    if (tree.in_s[x] || tree.slack_x[x] != 0) continue;
    enter_s(g, l, m, tree, x, tree.slack_x_from[x]);
    return {GrowOutcome::Kind::Extended, {}, 0};
  }
  const AlphaStep step = compute_alpha_l(g, tree);
  update_labels(l, tree, step.alpha);
  return {GrowOutcome::Kind::LabelsUpdated, {}, step.alpha};
}

void augment(const ExpandedGraph& g, MatchState& m, const std::vector<VertexId>& path) {
  if (path.size() < 2 || path.size() % 2 != 0) {
    throw ContractViolation("augmenting path must have an even number of vertices");
  }
  std::vector<int> idx(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    const bool expect_x = k % 2 == 0;
    if (path[k].on_x_side() != expect_x) {
      throw ContractViolation("augmenting path does not alternate X and Y at " + path[k].name());
    }
    idx[k] = expect_x ? g.x_index(path[k]) : g.y_index(path[k]);
  }
  if (!is_free(g, m, path.front())) throw ContractViolation("path start is not free");
  if (!is_free(g, m, path.back())) throw ContractViolation("path end is not free");
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const int x = idx[k % 2 == 0 ? k : k + 1];
    const int y = idx[k % 2 == 0 ? k + 1 : k];
    if (!g.has_edge(x, y)) throw ContractViolation("path uses a non-edge");
    const bool should_be_matched = k % 2 == 1;
    if (m.contains(x, y) != should_be_matched) {
      throw ContractViolation("path edges do not alternate between unmatched and matched");
    }
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (k % 2 == 0) {
      m.add(idx[k], idx[k + 1]);
    } else {
      m.remove(idx[k + 1], idx[k]);
    }
  }
}

CertificateReport certificate_details(const ExpandedGraph& g, const Labeling& l, const MatchState& m) {
  CertificateReport r;
  for (int x = 0; x < g.x_count(); ++x) {
    for_each_neighbor(g, x, [&](int y) {
      const Cost cover = l.x[x] + l.y[y];
      const Cost p = g.profit_unchecked(x, y);
      if (m.contains(x, y)) {
        if (cover > p) r.matched_not_overcovered = false;
        if (cover != p) r.strictly_tight = false;
      } else {
        if (cover < p) r.unmatched_feasible = false;
      }
    });
    if (m.num_x(x) != g.cap_x(x)) r.saturated = false;
  }
  for (int y = 0; y < g.y_count(); ++y)
    if (m.num_y(y) != g.cap_y(y)) r.saturated = false;
  r.strictly_tight = r.strictly_tight && r.unmatched_feasible && r.matched_not_overcovered && r.saturated;
  return r;
}

bool certificate_check(const ExpandedGraph& g, const Labeling& l, const MatchState& m) {
  return certificate_details(g, l, m).ok();
}

std::map<Pair, int> extract_original_matching(const ExpandedGraph& g, const MatchState& m) {
  std::map<Pair, int> out;
  for (int x = 0; x < g.x_count(); ++x) {
    for (int y : m.partners_of_x(x)) {
      if (auto pair = g.original_pair(x, y)) ++out[*pair];
    }
  }
  return out;
}

std::string display_name(const ExpandedGraph& g, VertexId v) {
  if (!g.swapped()) return v.name();
  static constexpr const char* kPrefix[] = {"b_", "b'_", "a_", "a'_", "c_"};
  return kPrefix[static_cast<int>(v.cls)] + std::to_string(v.index + 1);
}

ExpandedSolveResult solve_expanded(const ExpandedGraph& g, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  ExpandedSolveResult result{initial_labeling(g), MatchState(g), {}};
  Labeling& l = result.labels;
  MatchState& m = result.matching;
  SolveStats& stats = result.stats;
  const auto& trace = options.trace;

  std::vector<int> order(g.x_count());
  std::iota(order.begin(), order.end(), 0);
  if (options.root_order_seed) {
    std::mt19937_64 rng(*options.root_order_seed);
    std::shuffle(order.begin(), order.begin() + g.s(), rng);
    std::shuffle(order.begin() + g.s(), order.end(), rng);
  }

  std::int64_t peak_tree = 0;
  for (int x : order) {
    while (m.num_x(x) < g.cap_x(x)) {
      const VertexId root = g.x_vertex(x);
      if (trace) trace("event=phase index=" + std::to_string(stats.augmentations + 1) +
                       " root=" + display_name(g, root));
      AlternatingTree tree = tree_init(g, l, m, root);
      while (true) {
        GrowOutcome step = grow_or_augment(g, l, m, tree);
        if (step.kind == GrowOutcome::Kind::LabelsUpdated) {
          ++stats.label_updates;
          if (trace) trace("event=label_update alpha=" + std::to_string(step.alpha));
        } else if (step.kind == GrowOutcome::Kind::Augmenting) {
          const int vertices = static_cast<int>(step.path.size());
          augment(g, m, step.path);
          ++stats.augmentations;
          ++stats.path_vertex_histogram[vertices];
          if (trace) trace("event=augment root=" + display_name(g, root) +
                           " path_vertices=" + std::to_string(vertices) +
                           " end=" + display_name(g, step.path.back()));
          break;
        }
      }
      peak_tree = std::max(peak_tree, tree.element_count());
    }
  }

  const auto nx = static_cast<std::int64_t>(g.x_count());
  const auto ny = static_cast<std::int64_t>(g.y_count());
  // labels + num counters + the largest alternating tree (slacks, parents, membership)
  stats.aux_elements = (nx + ny) + (nx + ny) + peak_tree;
  stats.matched_edges = m.size();
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

Solution solve_mmdc(const Instance& inst, const SolveOptions& options) {
  const ExpandedGraph g(inst);
  ExpandedSolveResult r = solve_expanded(g, options);
  Solution sol;
  sol.multiplicities = extract_original_matching(g, r.matching);
  sol.total_cost = evaluate_cost(inst, sol);
  sol.stats = std::move(r.stats);
  return sol;
}

}  // namespace mmdc
