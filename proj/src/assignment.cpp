#include "mmdc/assignment.hpp"

#include <algorithm>
#include <limits>

#include "mmdc/errors.hpp"

namespace mmdc {

AssignmentResult solve_assignment_basic(const std::vector<std::vector<Cost>>& weights,
                                        bool maximize) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) throw ContractViolation("assignment matrix is empty");
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != n) throw ContractViolation("assignment matrix is not square");
  }

  Cost w_max = std::numeric_limits<Cost>::min();
  for (const auto& row : weights) w_max = std::max(w_max, *std::max_element(row.begin(), row.end()));
  auto profit = [&](int i, int j) { return maximize ? weights[i][j] : w_max - weights[i][j]; };

  constexpr Cost kInf = std::numeric_limits<Cost>::max();
  std::vector<Cost> label_a(n), label_b(n, 0);
  for (int i = 0; i < n; ++i) {
    Cost best = profit(i, 0);
    for (int j = 1; j < n; ++j) best = std::max(best, profit(i, j));
    label_a[i] = best;
  }
  std::vector<int> mate_a(n, -1), mate_b(n, -1);

  std::vector<char> in_s(n), in_t(n);
  std::vector<Cost> slack(n);
  std::vector<int> slack_from(n), parent_b(n);

  for (int root = 0; root < n; ++root) {
    std::fill(in_s.begin(), in_s.end(), 0);
    std::fill(in_t.begin(), in_t.end(), 0);
    std::fill(slack.begin(), slack.end(), kInf);
    auto add_to_s = [&](int i) {
      in_s[i] = 1;
      for (int j = 0; j < n; ++j) {
        const Cost sl = label_a[i] + label_b[j] - profit(i, j);
        if (!in_t[j] && sl < slack[j]) {
          slack[j] = sl;
          slack_from[j] = i;
        }
      }
    };
    add_to_s(root);

    int free_b = -1;
    while (free_b < 0) {
      int pick = -1;
      for (int j = 0; j < n; ++j) {
        if (!in_t[j] && slack[j] == 0) {
          pick = j;
          break;
        }
      }
      if (pick < 0) {
        Cost delta = kInf;
        for (int j = 0; j < n; ++j)
          if (!in_t[j]) delta = std::min(delta, slack[j]);
        for (int i = 0; i < n; ++i)
          if (in_s[i]) label_a[i] -= delta;
        for (int j = 0; j < n; ++j) {
          if (in_t[j]) {
            label_b[j] += delta;
          } else {
            slack[j] -= delta;
          }
        }
        continue;
      }
      parent_b[pick] = slack_from[pick];
      if (mate_b[pick] < 0) {
        free_b = pick;
      } else {
        in_t[pick] = 1;
        add_to_s(mate_b[pick]);
      }
    }

    for (int j = free_b; j >= 0;) {
      const int i = parent_b[j];
      const int next = mate_a[i];
      mate_a[i] = j;
      mate_b[j] = i;
      j = next;
    }
  }

  AssignmentResult result;
  result.row_to_col = mate_a;
  for (int i = 0; i < n; ++i) result.value += weights[i][mate_a[i]];
  return result;
}

}  // namespace mmdc
