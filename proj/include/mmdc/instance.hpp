#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mmdc {

using Cost = std::int64_t;

/// Many-to-many matching problem with demands and capacities.
///
/// Point a_i of side A must be matched at least `demand_a[i]` and at most
/// `cap_a[i]` times; likewise b_j with `demand_b` / `cap_b`. `weight(i, j)` is
/// the cost of one a_i--b_j match. Indices are 0-based in the C++ API.
///
/// Construction only checks shapes and signs; bound relations such as
/// demand <= capacity are reported by validate_instance().
class Instance {
 public:
  Instance(int s, int t, std::vector<Cost> weights, std::vector<int> demand_a,
           std::vector<int> cap_a, std::vector<int> demand_b, std::vector<int> cap_b);

  int s() const noexcept { return s_; }
  int t() const noexcept { return t_; }
  Cost weight(int i, int j) const { return weights_[static_cast<std::size_t>(i) * t_ + j]; }
  const std::vector<Cost>& weights() const noexcept { return weights_; }
  const std::vector<int>& demand_a() const noexcept { return demand_a_; }
  const std::vector<int>& cap_a() const noexcept { return cap_a_; }
  const std::vector<int>& demand_b() const noexcept { return demand_b_; }
  const std::vector<int>& cap_b() const noexcept { return cap_b_; }

  Cost max_weight() const;

  /// Same problem with the roles of A and B exchanged (weights transposed).
  Instance transposed() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int s_;
  int t_;
  std::vector<Cost> weights_;
  std::vector<int> demand_a_;
  std::vector<int> cap_a_;
  std::vector<int> demand_b_;
  std::vector<int> cap_b_;
};

/// Counters collected by the capacity-aware Hungarian solver.
struct SolveStats {
  std::int64_t augmentations = 0;
  std::int64_t label_updates = 0;
  /// augmenting-path vertex count -> number of augmentations with that length
  std::map<int, std::int64_t> path_vertex_histogram;
  double wall_seconds = 0.0;
  /// labels + slacks + num counters + tree arrays, in scalar elements
  std::int64_t aux_elements = 0;
  /// final number of matched expanded edges (includes parked A'-C edges)
  std::int64_t matched_edges = 0;
};

using Pair = std::pair<int, int>;

struct Solution {
  /// (i, j) -> number of times a_i is matched to b_j; zero entries are absent
  std::map<Pair, int> multiplicities;
  Cost total_cost = 0;
  SolveStats stats;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// human-readable offending indices (1-based, e.g. "a_2")
  std::vector<std::string> offenders;
};

struct FeasibilityReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  std::string summary() const;
};

enum class Semantics {
  /// alpha_i <= deg(a_i) <= alpha'_i and beta_j <= deg(b_j) <= beta'_j
  DeclaredMmdc,
  /// as declared, but the side with the smaller total capacity must be exactly
  /// saturated (what the expanded construction produces)
  ExpandedSaturating,
};

FeasibilityReport validate_instance(const Instance& inst);

/// Sum of multiplicity * weight. Throws MalformedSolution on out-of-range
/// pairs or non-positive multiplicities.
Cost evaluate_cost(const Instance& inst, const Solution& sol);

FeasibilityReport verify_solution(const Instance& inst, const Solution& sol, Semantics mode);

/// Check names used in FeasibilityReport, shared with tests and the CLI.
namespace check {
inline constexpr const char* kDemandLeCapA = "demand_a<=cap_a";
inline constexpr const char* kDemandLeCapB = "demand_b<=cap_b";
inline constexpr const char* kSumDemandALeSumCapB = "sum(demand_a)<=sum(cap_b)";
inline constexpr const char* kSumDemandBLeSumCapA = "sum(demand_b)<=sum(cap_a)";
inline constexpr const char* kDemandADegree = "demand_a<=2t";
inline constexpr const char* kOptionalADegree = "cap_a-demand_a<=t+h_a";
inline constexpr const char* kDemandBDegree = "demand_b<=2s";
inline constexpr const char* kOptionalBDegree = "cap_b-demand_b<=s+h_b";
/// B' only reaches A (or A' only reaches B when the sides are swapped), so the
/// optional capacity of the saturated side must fit the other side's demand.
inline constexpr const char* kOptionalFitsDemand = "sum(optional of saturated side)<=sum(demand of other side)";

inline constexpr const char* kPairsInRange = "pairs_in_range";
inline constexpr const char* kPairMultiplicity = "pair_multiplicity<=3";
inline constexpr const char* kDemandA = "demand_a";
inline constexpr const char* kCapacityA = "capacity_a";
inline constexpr const char* kDemandB = "demand_b";
inline constexpr const char* kCapacityB = "capacity_b";
inline constexpr const char* kSaturation = "saturation";
inline constexpr const char* kCost = "total_cost";
}  // namespace check

}  // namespace mmdc
