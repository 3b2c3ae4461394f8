#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mmdc/instance.hpp"

namespace mmdc {

struct BenchParams {
  std::vector<int> sizes{40, 80, 160};  // n = s + t, split evenly
  std::uint64_t seed = 1;
  int reps = 3;
  Cost wmax = 100;
  int capmax = 3;
};

struct BenchRow {
  int n = 0;
  double median_seconds = 0.0;
  double mean_phases = 0.0;
  /// every rep had phases == total X-side capacity of its expanded graph
  bool phases_match_capacity = true;
  /// max over reps of the solver's auxiliary element count
  std::int64_t aux_elements = 0;
  /// generated instances with no saturating matching, replaced by a later seed
  int skipped_infeasible = 0;
  std::map<int, std::int64_t> path_vertex_histogram;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// least-squares slope of log(median_seconds) against log(n)
  double slope = 0.0;

  std::string to_text() const;
};

/// Times solve_mmdc on generated instances for each size. Requires at least
/// three strictly increasing sizes; throws std::invalid_argument otherwise.
BenchReport run_bench(const BenchParams& params);

/// Least-squares slope of log(y) on log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mmdc
