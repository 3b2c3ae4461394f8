#include "mmdc/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mmdc/errors.hpp"

namespace mmdc {

namespace {

std::string name_a(int i) { return "a_" + std::to_string(i + 1); }
std::string name_b(int j) { return "b_" + std::to_string(j + 1); }

std::int64_t sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

void require_size(const std::vector<int>& v, int n, const char* what) {
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) +
                                " entries, got " + std::to_string(v.size()));
  }
  for (int x : v) {
    if (x < 0) throw std::invalid_argument(std::string(what) + ": negative bound");
  }
}

}  // namespace

Instance::Instance(int s, int t, std::vector<Cost> weights, std::vector<int> demand_a,
                   std::vector<int> cap_a, std::vector<int> demand_b, std::vector<int> cap_b)
    : s_(s),
      t_(t),
      weights_(std::move(weights)),
      demand_a_(std::move(demand_a)),
      cap_a_(std::move(cap_a)),
      demand_b_(std::move(demand_b)),
      cap_b_(std::move(cap_b)) {
  if (s_ < 1 || t_ < 1) throw std::invalid_argument("instance sides must be non-empty");
  if (weights_.size() != static_cast<std::size_t>(s_) * t_) {
    throw std::invalid_argument("weight matrix must have s*t entries");
  }
  if (std::any_of(weights_.begin(), weights_.end(), [](Cost w) { return w < 0; })) {
    throw std::invalid_argument("weights must be non-negative");
  }
  require_size(demand_a_, s_, "demand_a");
  require_size(cap_a_, s_, "cap_a");
  require_size(demand_b_, t_, "demand_b");
  require_size(cap_b_, t_, "cap_b");
}

Cost Instance::max_weight() const { return *std::max_element(weights_.begin(), weights_.end()); }

Instance Instance::transposed() const {
  std::vector<Cost> w(weights_.size());
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < t_; ++j) w[static_cast<std::size_t>(j) * s_ + i] = weight(i, j);
  return Instance(t_, s_, std::move(w), demand_b_, cap_b_, demand_a_, cap_a_);
}

bool FeasibilityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* FeasibilityReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string FeasibilityReport::summary() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL");
  for (const auto& c : checks) {
    if (c.passed) continue;
    os << "\n  " << c.name << ":";
    for (const auto& o : c.offenders) os << ' ' << o;
  }
  return os.str();
}

FeasibilityReport validate_instance(const Instance& inst) {
  const int s = inst.s();
  const int t = inst.t();
  const auto& da = inst.demand_a();
  const auto& ca = inst.cap_a();
  const auto& db = inst.demand_b();
  const auto& cb = inst.cap_b();

  const std::int64_t sum_ca = sum(ca);
  const std::int64_t sum_cb = sum(cb);
  // Surplus absorbed by C on whichever side has more capacity.
  const std::int64_t h_a = std::max<std::int64_t>(0, sum_ca - sum_cb);
  const std::int64_t h_b = std::max<std::int64_t>(0, sum_cb - sum_ca);

  FeasibilityReport report;
  auto per_vertex = [&](const char* name, int n, auto&& ok, auto&& label) {
    CheckResult c{name, true, {}};
    for (int k = 0; k < n; ++k) {
      if (!ok(k)) {
        c.passed = false;
        c.offenders.push_back(label(k));
      }
    }
    report.checks.push_back(std::move(c));
  };
  auto aggregate = [&](const char* name, std::int64_t lhs, std::int64_t rhs) {
    CheckResult c{name, lhs <= rhs, {}};
    if (!c.passed) c.offenders.push_back(std::to_string(lhs) + ">" + std::to_string(rhs));
    report.checks.push_back(std::move(c));
  };

  per_vertex(check::kDemandLeCapA, s, [&](int i) { return da[i] <= ca[i]; }, name_a);
  per_vertex(check::kDemandLeCapB, t, [&](int j) { return db[j] <= cb[j]; }, name_b);
  aggregate(check::kSumDemandALeSumCapB, sum(da), sum_cb);
  aggregate(check::kSumDemandBLeSumCapA, sum(db), sum_ca);
  per_vertex(check::kDemandADegree, s, [&](int i) { return da[i] <= 2 * t; }, name_a);
  per_vertex(check::kOptionalADegree, s, [&](int i) { return ca[i] - da[i] <= t + h_a; }, name_a);
  per_vertex(check::kDemandBDegree, t, [&](int j) { return db[j] <= 2 * s; }, name_b);
  per_vertex(check::kOptionalBDegree, t, [&](int j) { return cb[j] - db[j] <= s + h_b; }, name_b);
  if (sum_ca >= sum_cb) {
    aggregate(check::kOptionalFitsDemand, sum_cb - sum(db), sum(da));
  } else {
    aggregate(check::kOptionalFitsDemand, sum_ca - sum(da), sum(db));
  }
  return report;
}

Cost evaluate_cost(const Instance& inst, const Solution& sol) {
  Cost total = 0;
  for (const auto& [pair, m] : sol.multiplicities) {
    const auto [i, j] = pair;
    if (i < 0 || i >= inst.s() || j < 0 || j >= inst.t()) {
      throw MalformedSolution("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is outside the instance");
    }
    if (m <= 0) throw MalformedSolution("multiplicities must be positive");
    total += static_cast<Cost>(m) * inst.weight(i, j);
  }
  return total;
}

FeasibilityReport verify_solution(const Instance& inst, const Solution& sol, Semantics mode) {
  const int s = inst.s();
  const int t = inst.t();
  FeasibilityReport report;

  CheckResult range{check::kPairsInRange, true, {}};
  CheckResult mult{check::kPairMultiplicity, true, {}};
  std::vector<std::int64_t> deg_a(s, 0), deg_b(t, 0);
  Cost cost = 0;
  for (const auto& [pair, m] : sol.multiplicities) {
    const auto [i, j] = pair;
    const std::string label = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    if (i < 0 || i >= s || j < 0 || j >= t || m <= 0) {
      range.passed = false;
      range.offenders.push_back(label);
      continue;
    }
    if (m > 3) {
      mult.passed = false;
      mult.offenders.push_back(label);
    }
    deg_a[i] += m;
    deg_b[j] += m;
    cost += static_cast<Cost>(m) * inst.weight(i, j);
  }
  report.checks.push_back(std::move(range));
  report.checks.push_back(std::move(mult));

  auto per_vertex = [&](const char* name, int n, auto&& ok, auto&& label) {
    CheckResult c{name, true, {}};
    for (int k = 0; k < n; ++k) {
      if (!ok(k)) {
        c.passed = false;
        c.offenders.push_back(label(k));
      }
    }
    report.checks.push_back(std::move(c));
  };
  per_vertex(check::kDemandA, s, [&](int i) { return deg_a[i] >= inst.demand_a()[i]; }, name_a);
  per_vertex(check::kCapacityA, s, [&](int i) { return deg_a[i] <= inst.cap_a()[i]; }, name_a);
  per_vertex(check::kDemandB, t, [&](int j) { return deg_b[j] >= inst.demand_b()[j]; }, name_b);
  per_vertex(check::kCapacityB, t, [&](int j) { return deg_b[j] <= inst.cap_b()[j]; }, name_b);

  if (mode == Semantics::ExpandedSaturating) {
    // The side with the smaller total capacity is the one the construction saturates.
    if (sum(inst.cap_a()) >= sum(inst.cap_b())) {
      per_vertex(check::kSaturation, t, [&](int j) { return deg_b[j] == inst.cap_b()[j]; }, name_b);
    } else {
      per_vertex(check::kSaturation, s, [&](int i) { return deg_a[i] == inst.cap_a()[i]; }, name_a);
    }
  }

  CheckResult c{check::kCost, cost == sol.total_cost, {}};
  if (!c.passed) {
    c.offenders.push_back("recomputed " + std::to_string(cost) + " != reported " +
                          std::to_string(sol.total_cost));
  }
  report.checks.push_back(std::move(c));
  return report;
}

}  // namespace mmdc
