#include "mmdc/expanded_graph.hpp"

#include <numeric>

#include "mmdc/errors.hpp"

namespace mmdc {

std::string VertexId::name() const {
  static constexpr const char* kPrefix[] = {"a_", "a'_", "b_", "b'_", "c_"};
  return kPrefix[static_cast<int>(cls)] + std::to_string(index + 1);
}

ExpandedGraph::ExpandedGraph(const Instance& inst) : ExpandedGraph(inst, true) {}

ExpandedGraph ExpandedGraph::unchecked(const Instance& inst) { return ExpandedGraph(inst, false); }

ExpandedGraph::ExpandedGraph(const Instance& inst, bool validate) : inst_(inst) {
  if (validate) {
    const auto report = validate_instance(inst);
    if (!report.passed()) throw RejectedInstance("instance rejected: " + report.summary());
  }
  const auto total = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
  };
  swapped_ = total(inst.cap_a()) < total(inst.cap_b());

  const auto& da = swapped_ ? inst.demand_b() : inst.demand_a();
  const auto& ca = swapped_ ? inst.cap_b() : inst.cap_a();
  const auto& db = swapped_ ? inst.demand_a() : inst.demand_b();
  const auto& cb = swapped_ ? inst.cap_a() : inst.cap_b();
  s_ = swapped_ ? inst.t() : inst.s();
  t_ = swapped_ ? inst.s() : inst.t();
  h_ = static_cast<int>(total(ca) - total(cb));
  w_max_ = inst.max_weight();

  cap_x_.resize(2 * s_);
  for (int i = 0; i < s_; ++i) {
    if (da[i] > ca[i]) throw RejectedInstance("demand exceeds capacity at " + x_vertex(i).name());
    cap_x_[i] = da[i];
    cap_x_[s_ + i] = ca[i] - da[i];
  }
  cap_y_.assign(2 * t_ + h_, 1);
  for (int j = 0; j < t_; ++j) {
    if (db[j] > cb[j]) throw RejectedInstance("demand exceeds capacity at " + y_vertex(j).name());
    cap_y_[j] = db[j];
    cap_y_[t_ + j] = cb[j] - db[j];
  }
}

int ExpandedGraph::cap(VertexId v) const {
  return v.on_x_side() ? cap_x_[x_index(v)] : cap_y_[y_index(v)];
}

std::optional<Cost> ExpandedGraph::profit(int x, int y) const {
  if (x < 0 || x >= x_count() || y < 0 || y >= y_count() || !has_edge(x, y)) return std::nullopt;
  return profit_unchecked(x, y);
}

std::optional<Cost> ExpandedGraph::profit(VertexId x, VertexId y) const {
  if (!x.on_x_side() || y.on_x_side()) return std::nullopt;
  return profit(x_index(x), y_index(y));
}

std::vector<VertexId> ExpandedGraph::neighbors(VertexId x) const {
  if (!x.on_x_side()) throw ContractViolation("neighbors() expects an X-side vertex, got " + x.name());
  const int xi = x_index(x);
  std::vector<VertexId> out;
  for (int y = 0; y < y_count(); ++y)
    if (has_edge(xi, y)) out.push_back(y_vertex(y));
  return out;
}

VertexId ExpandedGraph::x_vertex(int x) const {
  return x < s_ ? VertexId{VertexClass::A, x} : VertexId{VertexClass::APrime, x - s_};
}

VertexId ExpandedGraph::y_vertex(int y) const {
  if (y < t_) return {VertexClass::B, y};
  if (y < 2 * t_) return {VertexClass::BPrime, y - t_};
  return {VertexClass::C, y - 2 * t_};
}

int ExpandedGraph::x_index(VertexId v) const {
  int base = 0;
  switch (v.cls) {
    case VertexClass::A: base = 0; break;
    case VertexClass::APrime: base = s_; break;
    default: throw ContractViolation(v.name() + " is not an X-side vertex");
  }
  if (v.index < 0 || v.index >= s_) throw ContractViolation(v.name() + " is out of range");
  return base + v.index;
}

int ExpandedGraph::y_index(VertexId v) const {
  int base = 0;
  int limit = t_;
  switch (v.cls) {
    case VertexClass::B: base = 0; break;
    case VertexClass::BPrime: base = t_; break;
    case VertexClass::C: base = 2 * t_; limit = h_; break;
    default: throw ContractViolation(v.name() + " is not a Y-side vertex");
  }
  if (v.index < 0 || v.index >= limit) throw ContractViolation(v.name() + " is out of range");
  return base + v.index;
}

std::optional<Pair> ExpandedGraph::original_pair(int x, int y) const {
  if (!has_edge(x, y) || y >= 2 * t_) return std::nullopt;
  const int i = x < s_ ? x : x - s_;
  const int j = y < t_ ? y : y - t_;
  return swapped_ ? Pair{j, i} : Pair{i, j};
}

std::int64_t ExpandedGraph::total_x_capacity() const {
  return std::accumulate(cap_x_.begin(), cap_x_.end(), std::int64_t{0});
}

std::int64_t ExpandedGraph::total_y_capacity() const {
  return std::accumulate(cap_y_.begin(), cap_y_.end(), std::int64_t{0});
}

}  // namespace mmdc
