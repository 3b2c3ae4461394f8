#include "mmdc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mmdc/errors.hpp"
#include "mmdc/expanded_graph.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/hungarian.hpp"

namespace mmdc {

namespace {

constexpr int kMaxAttempts = 1000;
constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

}  // namespace

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need matching samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchReport run_bench(const BenchParams& params) {
  if (params.sizes.size() < 3) throw std::invalid_argument("bench needs at least three sizes");
  for (std::size_t k = 0; k < params.sizes.size(); ++k) {
    if (params.sizes[k] < 2) throw std::invalid_argument("bench sizes must be at least 2");
    if (k > 0 && params.sizes[k] <= params.sizes[k - 1]) {
      throw std::invalid_argument("bench sizes must be strictly increasing");
    }
  }
  if (params.reps < 1) throw std::invalid_argument("reps must be positive");

  BenchReport report;
  for (int n : params.sizes) {
    BenchRow row;
    row.n = n;
    std::vector<double> times;
    double phases = 0;
    for (int rep = 0; rep < params.reps; ++rep) {
      GeneratorParams gp;
      gp.s = n / 2;
      gp.t = n - n / 2;
      gp.seed = params.seed + 1000003ULL * static_cast<std::uint64_t>(n) + rep;
      gp.wmax = params.wmax;
      gp.capmax = params.capmax;
      // Infeasible draws are skipped by moving to a fixed later seed.
      std::optional<ExpandedGraph> g;
      std::optional<ExpandedSolveResult> solved;
      for (int attempt = 0; !solved; ++attempt) {
        if (attempt == kMaxAttempts) throw std::runtime_error("bench: no feasible instance for n=" + std::to_string(n));
        g.emplace(generate_instance(gp));
        try {
          solved = solve_expanded(*g);
        } catch (const InfeasibleInstance&) {
          ++row.skipped_infeasible;
          gp.seed += kSeedStride;
        }
      }
      const ExpandedSolveResult& r = *solved;
      times.push_back(r.stats.wall_seconds);
      phases += static_cast<double>(r.stats.augmentations);
      row.phases_match_capacity =
          row.phases_match_capacity && r.stats.augmentations == g->total_x_capacity();
      row.aux_elements = std::max(row.aux_elements, r.stats.aux_elements);
      for (const auto& [len, count] : r.stats.path_vertex_histogram) {
        row.path_vertex_histogram[len] += count;
      }
    }
    std::sort(times.begin(), times.end());
    row.median_seconds = times[times.size() / 2];
    row.mean_phases = phases / params.reps;
    report.rows.push_back(std::move(row));
  }

  std::vector<double> xs, ys;
  for (const auto& row : report.rows) {
    xs.push_back(row.n);
    ys.push_back(std::max(row.median_seconds, 1e-9));
  }
  report.slope = log_log_slope(xs, ys);
  return report;
}

std::string BenchReport::to_text() const {
  std::ostringstream os;
  os << "n median_seconds mean_phases phases_match_capacity aux_elements skipped_infeasible path_vertices\n";
  for (const auto& row : rows) {
    os << row.n << ' ' << std::setprecision(6) << row.median_seconds << ' ' << row.mean_phases << ' '
       << (row.phases_match_capacity ? "yes" : "no") << ' ' << row.aux_elements << ' '
       << row.skipped_infeasible << ' ';
    bool first = true;
    for (const auto& [len, count] : row.path_vertex_histogram) {
      os << (first ? "" : ",") << len << ':' << count;
      first = false;
    }
    os << '\n';
  }
  os << "slope " << std::setprecision(4) << slope << '\n';
  return os.str();
}

}  // namespace mmdc
