#include <doctest.h>

#include "mmdc/assignment.hpp"
#include "mmdc/errors.hpp"
#include "test_support.hpp"

using namespace mmdc;

TEST_CASE("solve_assignment_basic: 1x1") {
  const auto r = solve_assignment_basic({{1}}, true);
  CHECK(r.row_to_col == std::vector<int>{0});
  CHECK(r.value == 1);
}

TEST_CASE("solve_assignment_basic: 2x2 maximize") {
  // permutations: 3 + 4 = 7, 1 + 2 = 3
  const auto r = solve_assignment_basic({{3, 1}, {2, 4}}, true);
  CHECK(r.row_to_col == std::vector<int>{0, 1});
  CHECK(r.value == 7);
  CHECK(solve_assignment_basic({{3, 1}, {2, 4}}, false).value == 3);
}

TEST_CASE("solve_assignment_basic rejects non-square input") {
  CHECK_THROWS_AS(solve_assignment_basic({{1, 2}}, true), ContractViolation);
  CHECK_THROWS_AS(solve_assignment_basic({}, true), ContractViolation);
}

TEST_CASE("solve_assignment_basic matches the permutation oracle") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto w = mmdc::testing::random_matrix(rng, n, 20);
      const bool maximize = trial % 2 == 0;
      const auto r = solve_assignment_basic(w, maximize);
      CHECK(r.value == mmdc::testing::permutation_optimum(w, maximize));
      std::vector<int> cols = r.row_to_col;
      std::sort(cols.begin(), cols.end());
      for (int k = 0; k < n; ++k) CHECK(cols[k] == k);
    }
  }
}
