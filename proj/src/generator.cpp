#include "mmdc/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mmdc {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Inclusive range. Modulo bias is irrelevant at these widths.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

 private:
  std::mt19937_64 rng_;
};

std::int64_t total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

// Raises capacity on `demand/cap` until sum(cap) >= need.
void raise_capacity(Draw& draw, std::vector<int>& demand, std::vector<int>& cap, int other_side,
                    std::int64_t need) {
  const int n = static_cast<int>(cap.size());
  while (total(cap) < need) {
    const int k = static_cast<int>(draw.uniform(0, n - 1));
    if (cap[k] - demand[k] < other_side) {
      ++cap[k];
    } else if (demand[k] < 2 * other_side) {
      ++demand[k];
      ++cap[k];
    }
  }
}

// Raises demands until the optional capacity of the saturated side (`sd/sc`)
// fits the demand of the other side (`od/oc`).
void fit_optional(Draw& draw, std::vector<int>& sd, const std::vector<int>& sc, int s_other,
                  std::vector<int>& od, const std::vector<int>& oc, int o_other) {
  while (total(sc) - total(sd) > total(od)) {
    std::vector<int*> movable;
    for (std::size_t k = 0; k < sd.size(); ++k)
      if (sd[k] < sc[k] && sd[k] < 2 * s_other) movable.push_back(&sd[k]);
    if (total(od) < total(sc)) {
      for (std::size_t k = 0; k < od.size(); ++k)
        if (od[k] < oc[k] && od[k] < 2 * o_other) movable.push_back(&od[k]);
    }
    if (movable.empty()) return;
    ++*movable[static_cast<std::size_t>(draw.uniform(0, static_cast<std::int64_t>(movable.size()) - 1))];
  }
}

}  // namespace

Instance generate_instance(const GeneratorParams& p) {
  if (p.s < 1 || p.t < 1) throw std::invalid_argument("generator sizes must be positive");
  if (p.capmax < 1) throw std::invalid_argument("capmax must be at least 1");
  if (p.wmax < 0) throw std::invalid_argument("wmax must be non-negative");

  Draw draw(p.seed);
  std::vector<Cost> weights(static_cast<std::size_t>(p.s) * p.t);
  for (auto& w : weights) w = draw.uniform(0, p.wmax);

  auto bounds = [&](int n, int other_side, std::vector<int>& demand, std::vector<int>& cap) {
    demand.resize(n);
    cap.resize(n);
    for (int k = 0; k < n; ++k) {
      cap[k] = static_cast<int>(draw.uniform(1, p.capmax));
      demand[k] = static_cast<int>(draw.uniform(0, cap[k]));
      demand[k] = std::min(demand[k], 2 * other_side);
      cap[k] = std::min(cap[k], demand[k] + other_side);
    }
  };
  std::vector<int> da, ca, db, cb;
  bounds(p.s, p.t, da, ca);
  bounds(p.t, p.s, db, cb);

  // Each pass only raises bounds, and both sums are capped by the degree limits.
  while (total(da) > total(cb) || total(db) > total(ca)) {
    raise_capacity(draw, db, cb, p.s, total(da));
    raise_capacity(draw, da, ca, p.t, total(db));
  }
  if (total(ca) >= total(cb)) {
    fit_optional(draw, db, cb, p.s, da, ca, p.t);
  } else {
    fit_optional(draw, da, ca, p.t, db, cb, p.s);
  }
  return Instance(p.s, p.t, std::move(weights), std::move(da), std::move(ca), std::move(db),
                  std::move(cb));
}

}  // namespace mmdc
