#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mmdc/instance.hpp"

namespace mmdc {

/// Vertex classes of the expanded graph. X = A u A', Y = B u B' u C.
/// Declaration order is the deterministic vertex order used for tie-breaks.
enum class VertexClass { A, APrime, B, BPrime, C };

struct VertexId {
  VertexClass cls;
  int index;  // 0-based within its class

  bool on_x_side() const noexcept { return cls == VertexClass::A || cls == VertexClass::APrime; }
  std::string name() const;  // "a_1", "a'_2", "c_3", ...

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Complete bipartite structure X = A u A', Y = B u B' u C built from an
/// Instance. Vertex capacities split each point into a demand copy (A, B) and
/// an optional copy (A', B'); C holds h unit vertices absorbing the capacity
/// surplus of X. Edges exist for (A,B), (A,B'), (A',B) and (A',C).
///
/// Profits are derived on demand from the instance matrix:
/// p = w_max - w on original-pair edges and p = w_max on A'-C edges, so a
/// max-profit saturating matching is a min-cost one.
///
/// When the B side has more total capacity than A, the sides are exchanged
/// internally so that h >= 0; `swapped()` reports this and original_pair()
/// undoes it. Vertices are addressed densely: x in [0, x_count()) lists A
/// then A'; y in [0, y_count()) lists B, then B', then C.
class ExpandedGraph {
 public:
  /// Throws RejectedInstance if validate_instance(inst) fails.
  explicit ExpandedGraph(const Instance& inst);

  /// Builds without validation. Used by the oracle to examine instances that
  /// the solver would refuse.
  static ExpandedGraph unchecked(const Instance& inst);

  const Instance& instance() const noexcept { return inst_; }
  bool swapped() const noexcept { return swapped_; }
  int s() const noexcept { return s_; }
  int t() const noexcept { return t_; }
  int h() const noexcept { return h_; }
  Cost w_max() const noexcept { return w_max_; }

  int x_count() const noexcept { return 2 * s_; }
  int y_count() const noexcept { return 2 * t_ + h_; }

  int cap_x(int x) const { return cap_x_[x]; }
  int cap_y(int y) const { return cap_y_[y]; }
  int cap(VertexId v) const;

  bool has_edge(int x, int y) const noexcept {
    return x < s_ ? y < 2 * t_ : (y < t_ || y >= 2 * t_);
  }
  /// Profit of an existing edge; caller guarantees has_edge(x, y).
  Cost profit_unchecked(int x, int y) const noexcept {
    if (y >= 2 * t_) return w_max_;
    const int i = x < s_ ? x : x - s_;
    const int j = y < t_ ? y : y - t_;
    return w_max_ - weight(i, j);
  }
  std::optional<Cost> profit(int x, int y) const;
  std::optional<Cost> profit(VertexId x, VertexId y) const;

  /// Weight in normalized orientation (i indexes internal A, j internal B).
  Cost weight(int i, int j) const noexcept {
    return swapped_ ? inst_.weight(j, i) : inst_.weight(i, j);
  }

  /// Y-neighbours of an X vertex: B ascending, B' ascending, C ascending.
  /// Throws ContractViolation for Y-side arguments.
  std::vector<VertexId> neighbors(VertexId x) const;

  VertexId x_vertex(int x) const;
  VertexId y_vertex(int y) const;
  int x_index(VertexId v) const;
  int y_index(VertexId v) const;

  /// Original (i, j) pair an edge represents, or nullopt for A'-C edges.
  std::optional<Pair> original_pair(int x, int y) const;

  std::int64_t total_x_capacity() const;
  std::int64_t total_y_capacity() const;

 private:
  ExpandedGraph(const Instance& inst, bool validate);

  Instance inst_;
  bool swapped_ = false;
  int s_ = 0;
  int t_ = 0;
  int h_ = 0;
  Cost w_max_ = 0;
  std::vector<int> cap_x_;
  std::vector<int> cap_y_;
};

}  // namespace mmdc
