#pragma once

#include <vector>

#include "mmdc/instance.hpp"

namespace mmdc {

struct AssignmentResult {
  std::vector<int> row_to_col;  // permutation, 0-based
  Cost value = 0;               // objective in the caller's terms (sum of original entries)
};

/// Classical unit-capacity Hungarian method on a square matrix.
///
/// With maximize=false entries are costs and are shifted to profits
/// w_max - w before running the max-weight method. Throws ContractViolation
/// for empty or non-square input.
AssignmentResult solve_assignment_basic(const std::vector<std::vector<Cost>>& weights,
                                        bool maximize);

}  // namespace mmdc
