#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mmdc/expanded_graph.hpp"
#include "mmdc/instance.hpp"

namespace mmdc {

/// Integer dual labels over the expanded graph, indexed densely.
struct Labeling {
  std::vector<Cost> x;
  std::vector<Cost> y;

  Cost of(const ExpandedGraph& g, VertexId v) const {
    return v.on_x_side() ? x[g.x_index(v)] : y[g.y_index(v)];
  }
};

/// Current expanded b-matching. Each expanded edge is used at most once and
/// num(v) always equals the number of matched edges at v.
class MatchState {
 public:
  explicit MatchState(const ExpandedGraph& g);

  int num_x(int x) const { return static_cast<int>(by_x_[x].size()); }
  int num_y(int y) const { return static_cast<int>(by_y_[y].size()); }
  int num(const ExpandedGraph& g, VertexId v) const {
    return v.on_x_side() ? num_x(g.x_index(v)) : num_y(g.y_index(v));
  }
  const std::vector<int>& partners_of_x(int x) const { return by_x_[x]; }
  const std::vector<int>& partners_of_y(int y) const { return by_y_[y]; }
  bool contains(int x, int y) const;
  std::int64_t size() const noexcept { return size_; }

  /// Throw ContractViolation if the edge is already present / absent.
  void add(int x, int y);
  void remove(int x, int y);

 private:
  std::vector<std::vector<int>> by_x_;
  std::vector<std::vector<int>> by_y_;
  std::int64_t size_ = 0;
};

inline constexpr Cost kInfiniteSlack = std::numeric_limits<Cost>::max();

/// Hungarian search tree rooted at a free X vertex.
///
/// slack_y[y] (y not in T) is min over x in S, (x,y) unmatched, of
/// l(x) + l(y) - p(x,y). slack_x[x] (x not in S) is the reduced cost
/// p(x,y) - l(x) - l(y) of the cheapest matched edge from a T vertex y; it is
/// only finite when that matched edge is not tight. Both are kInfiniteSlack
/// when no such edge exists.
struct AlternatingTree {
  int root = -1;
  std::vector<char> in_s;
  std::vector<char> in_t;
  std::vector<int> parent_of_x;  // y through which x entered S, -1 for root
  std::vector<int> parent_of_y;  // x through which y entered T
  std::vector<Cost> slack_y;
  std::vector<int> slack_y_from;
  std::vector<Cost> slack_x;
  std::vector<int> slack_x_from;
  std::vector<int> s_members;
  std::vector<int> t_members;
  std::vector<int> scratch;  // per-y marker used while scanning matched partners
  int scratch_epoch = 0;

  bool in_tree(const ExpandedGraph& g, VertexId v) const {
    return v.on_x_side() ? in_s[g.x_index(v)] != 0 : in_t[g.y_index(v)] != 0;
  }
  Cost slack_of(const ExpandedGraph& g, VertexId v) const {
    return v.on_x_side() ? slack_x[g.x_index(v)] : slack_y[g.y_index(v)];
  }
  std::int64_t element_count() const;
};

struct AlphaStep {
  Cost alpha;
  VertexId witness;
};

struct GrowOutcome {
  enum class Kind { Augmenting, Extended, LabelsUpdated };
  Kind kind;
  std::vector<VertexId> path;  // root ... free y, for Augmenting
  Cost alpha = 0;              // for LabelsUpdated
};

/// l(y) = 0 on Y; l(x) = max profit over x's neighbours.
Labeling initial_labeling(const ExpandedGraph& g);

bool is_free(const ExpandedGraph& g, const MatchState& m, VertexId v);

AlternatingTree tree_init(const ExpandedGraph& g, const Labeling& l, const MatchState& m,
                          VertexId root);

/// Minimum finite slack outside the tree with its lowest-ordered witness.
/// Throws InfeasibleInstance when every slack is infinite.
AlphaStep compute_alpha_l(const ExpandedGraph& g, const AlternatingTree& tree);

/// S labels drop by alpha, T labels rise by alpha, outside slacks drop by alpha.
void update_labels(Labeling& l, AlternatingTree& tree, Cost alpha);

/// One inner-loop step: extend the tree along a zero-slack edge, report an
/// augmenting path, or perform a dual update when nothing is tight.
GrowOutcome grow_or_augment(const ExpandedGraph& g, Labeling& l, const MatchState& m,
                            AlternatingTree& tree);

/// Flips an alternating path (root, y1, x1, y2, ..., y_k). Throws
/// ContractViolation on malformed paths.
void augment(const ExpandedGraph& g, MatchState& m, const std::vector<VertexId>& path);

struct CertificateReport {
  /// l(x) + l(y) >= p(x,y) on every unmatched edge
  bool unmatched_feasible = true;
  /// l(x) + l(y) <= p(x,y) on every matched edge
  bool matched_not_overcovered = true;
  /// num(v) == cap(v) everywhere
  bool saturated = true;
  /// stronger textbook form: feasible on all edges and every matched edge tight
  bool strictly_tight = true;

  bool ok() const noexcept { return unmatched_feasible && matched_not_overcovered && saturated; }
};

/// Dual certificate for a max-profit saturating b-matching with unit edge
/// capacities. ok() implies optimality by weak duality.
CertificateReport certificate_details(const ExpandedGraph& g, const Labeling& l, const MatchState& m);
bool certificate_check(const ExpandedGraph& g, const Labeling& l, const MatchState& m);

/// Folds expanded edges back into original-pair multiplicities; A'-C edges are dropped.
std::map<Pair, int> extract_original_matching(const ExpandedGraph& g, const MatchState& m);

struct SolveOptions {
  /// receives `key=value` trace records, one per call
  std::function<void(const std::string&)> trace;
  /// shuffles root selection within A and within A' (A still precedes A')
  std::optional<std::uint64_t> root_order_seed;
};

struct ExpandedSolveResult {
  Labeling labels;
  MatchState matching;
  SolveStats stats;
};

ExpandedSolveResult solve_expanded(const ExpandedGraph& g, const SolveOptions& options = {});

/// Builds the expanded graph, saturates it with the capacity-aware Hungarian
/// method and folds the result back. Throws RejectedInstance or InfeasibleInstance.
Solution solve_mmdc(const Instance& inst, const SolveOptions& options = {});

/// Vertex name in the caller's orientation (undoes the internal side swap).
std::string display_name(const ExpandedGraph& g, VertexId v);

}  // namespace mmdc
