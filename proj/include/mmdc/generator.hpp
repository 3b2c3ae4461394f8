#pragma once

#include <cstdint>

#include "mmdc/instance.hpp"

namespace mmdc {

struct GeneratorParams {
  int s = 4;
  int t = 4;
  std::uint64_t seed = 1;
  Cost wmax = 100;
  int capmax = 3;
};

/// Seeded random instance that passes validate_instance.
///
/// Weights are uniform in [0, wmax], cap_a uniform in [1, capmax] and
/// demand_a uniform in [0, cap_a] (same for B). Afterwards bounds are clamped
/// to the per-vertex degree limits (demand <= 2 * other side,
/// cap - demand <= other side) and, while sum(demand_a) > sum(cap_b) or
/// sum(demand_b) > sum(cap_a), a random vertex of the short side has its
/// capacity raised by one (its demand too, once its optional part is at the
/// limit). Finally, while the optional capacity of the saturated side exceeds
/// the demand of the other side, a random demand that can still grow on either
/// side is raised by one. This removes the most common cause of infeasibility
/// but does not guarantee a saturating matching exists. Only a
/// std::mt19937_64 stream is used, so output is identical for a given seed on
/// every platform.
Instance generate_instance(const GeneratorParams& params);

}  // namespace mmdc
