#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mmdc/instance.hpp"

namespace mmdc::testing {

inline Instance make_instance(const std::vector<std::vector<Cost>>& rows, std::vector<int> da,
                              std::vector<int> ca, std::vector<int> db, std::vector<int> cb) {
  const int s = static_cast<int>(rows.size());
  const int t = static_cast<int>(rows.front().size());
  std::vector<Cost> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return Instance(s, t, std::move(flat), std::move(da), std::move(ca), std::move(db), std::move(cb));
}

/// Instance with every demand and capacity equal to `bound`.
inline Instance uniform_bounds(const std::vector<std::vector<Cost>>& rows, int bound) {
  const int s = static_cast<int>(rows.size());
  const int t = static_cast<int>(rows.front().size());
  return make_instance(rows, std::vector<int>(s, bound), std::vector<int>(s, bound),
                       std::vector<int>(t, bound), std::vector<int>(t, bound));
}

/// Exhaustive permutation optimum of a square matrix.
inline Cost permutation_optimum(const std::vector<std::vector<Cost>>& w, bool maximize) {
  const int n = static_cast<int>(w.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Cost best = 0;
  bool first = true;
  do {
    Cost v = 0;
    for (int i = 0; i < n; ++i) v += w[i][perm[i]];
    if (first || (maximize ? v > best : v < best)) best = v;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<std::vector<Cost>> random_matrix(std::mt19937_64& rng, int n, Cost wmax) {
  std::vector<std::vector<Cost>> w(n, std::vector<Cost>(n));
  for (auto& row : w)
    for (auto& v : row) v = static_cast<Cost>(rng() % static_cast<std::uint64_t>(wmax + 1));
  return w;
}

/// Random small instance that passes validate_instance, or nullopt-like retry
/// handled by the caller via validate_instance.
inline Instance random_small_instance(std::mt19937_64& rng, int max_side, int max_cap, Cost wmax) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const int s = pick(1, max_side);
  const int t = pick(1, max_side);
  std::vector<Cost> w(static_cast<std::size_t>(s) * t);
  for (auto& v : w) v = pick(0, static_cast<int>(wmax));
  auto bounds = [&](int n, std::vector<int>& d, std::vector<int>& c) {
    for (int k = 0; k < n; ++k) {
      c.push_back(pick(0, max_cap));
      d.push_back(pick(0, c.back()));
    }
  };
  std::vector<int> da, ca, db, cb;
  bounds(s, da, ca);
  bounds(t, db, cb);
  return Instance(s, t, std::move(w), std::move(da), std::move(ca), std::move(db), std::move(cb));
}

}  // namespace mmdc::testing
