#include <doctest.h>

#include "mmdc/errors.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/instance.hpp"
#include "test_support.hpp"

using namespace mmdc;
using mmdc::testing::make_instance;
using mmdc::testing::uniform_bounds;

TEST_CASE("validate_instance: minimal balanced instance passes") {
  const auto report = validate_instance(uniform_bounds({{5}}, 1));
  CHECK(report.passed());
  for (const auto& c : report.checks) CHECK(c.passed);
}

TEST_CASE("validate_instance: demand above capacity") {
  const auto report = validate_instance(make_instance({{5}}, {2}, {1}, {1}, {1}));
  CHECK_FALSE(report.passed());
  const auto* c = report.find(check::kDemandLeCapA);
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK(c->offenders == std::vector<std::string>{"a_1"});
}

TEST_CASE("validate_instance: A demand exceeds B capacity") {
  const auto report = validate_instance(make_instance({{1}, {1}}, {1, 1}, {1, 1}, {1}, {1}));
  const auto* c = report.find(check::kSumDemandALeSumCapB);
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK(c->offenders == std::vector<std::string>{"2>1"});
  CHECK_FALSE(report.passed());
}

TEST_CASE("validate_instance: per-vertex degree limits") {
  // a_1 needs 3 demand slots but has only b_1 and b'_1 as neighbours.
  auto r1 = validate_instance(make_instance({{1}}, {3}, {3}, {3}, {3}));
  CHECK_FALSE(r1.find(check::kDemandADegree)->passed);
  CHECK_FALSE(r1.find(check::kDemandBDegree)->passed);

  // b'_1 only reaches A, so its capacity is at most s unless B is the larger side.
  auto r2 = validate_instance(make_instance({{1}}, {0}, {1}, {0}, {3}));
  CHECK(r2.find(check::kOptionalBDegree)->passed);  // h_b = 2 absorbs the surplus
  auto r3 = validate_instance(make_instance({{1}, {1}}, {0, 0}, {1, 1}, {0}, {2}));
  CHECK(r3.find(check::kOptionalBDegree)->passed);
  auto r4 = validate_instance(make_instance({{1}, {1}}, {0, 0}, {2, 2}, {0}, {3}));
  CHECK_FALSE(r4.find(check::kOptionalBDegree)->passed);
  CHECK_FALSE(validate_instance(make_instance({{1}}, {0}, {3}, {1}, {3})).find(check::kOptionalBDegree)->passed);
}

TEST_CASE("validate_instance: optional capacity of the saturated side needs demand on the other") {
  // b'_1 can only reach A, which demands nothing.
  const auto r = validate_instance(make_instance({{7}}, {0}, {2}, {0}, {1}));
  CHECK_FALSE(r.find(check::kOptionalFitsDemand)->passed);
  CHECK(r.find(check::kOptionalBDegree)->passed);
  // Swapped orientation: a'_1 can only reach B.
  CHECK_FALSE(validate_instance(make_instance({{7}}, {0}, {1}, {0}, {2})).find(check::kOptionalFitsDemand)->passed);
  CHECK(validate_instance(make_instance({{7}}, {1}, {2}, {0}, {1})).passed());
}

TEST_CASE("evaluate_cost examples") {
  Solution sol;
  sol.multiplicities = {{{0, 0}, 1}};
  CHECK(evaluate_cost(uniform_bounds({{5}}, 1), sol) == 5);

  sol.multiplicities = {{{0, 0}, 1}, {{1, 1}, 1}};
  CHECK(evaluate_cost(uniform_bounds({{1, 2}, {3, 4}}, 1), sol) == 5);

  sol.multiplicities = {{{0, 0}, 2}};
  CHECK(evaluate_cost(make_instance({{2}, {3}}, {1, 1}, {1, 1}, {1}, {2}), sol) == 4);
}

TEST_CASE("evaluate_cost rejects out-of-range pairs") {
  Solution sol;
  sol.multiplicities = {{{0, 1}, 1}};
  CHECK_THROWS_AS(evaluate_cost(uniform_bounds({{5}}, 1), sol), MalformedSolution);
}

TEST_CASE("evaluate_cost is linear in the multiplicities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = generate_instance({3, 4, rng(), 20, 3});
    Solution sol, doubled;
    for (int i = 0; i < inst.s(); ++i) {
      for (int j = 0; j < inst.t(); ++j) {
        const int m = static_cast<int>(rng() % 4);
        if (m == 0) continue;
        sol.multiplicities[{i, j}] = m;
        doubled.multiplicities[{i, j}] = 2 * m;
      }
    }
    CHECK(evaluate_cost(inst, doubled) == 2 * evaluate_cost(inst, sol));
  }
}

TEST_CASE("verify_solution examples") {
  const Instance one = uniform_bounds({{5}}, 1);
  Solution sol;
  sol.multiplicities = {{{0, 0}, 1}};
  sol.total_cost = 5;
  CHECK(verify_solution(one, sol, Semantics::DeclaredMmdc).passed());
  CHECK(verify_solution(one, sol, Semantics::ExpandedSaturating).passed());

  Solution empty;
  const auto failed = verify_solution(one, empty, Semantics::DeclaredMmdc);
  CHECK_FALSE(failed.passed());
  CHECK(failed.find(check::kDemandA)->offenders == std::vector<std::string>{"a_1"});

  // b_1 is matched once but the construction would saturate it at 2.
  const Instance loose = make_instance({{1, 2}, {3, 4}}, {1, 1}, {2, 2}, {1, 1}, {2, 2});
  Solution diag;
  diag.multiplicities = {{{0, 0}, 1}, {{1, 1}, 1}};
  diag.total_cost = 5;
  CHECK(verify_solution(loose, diag, Semantics::DeclaredMmdc).passed());
  const auto sat = verify_solution(loose, diag, Semantics::ExpandedSaturating);
  CHECK_FALSE(sat.passed());
  CHECK(sat.find(check::kSaturation)->offenders == std::vector<std::string>{"b_1", "b_2"});
}

TEST_CASE("verify_solution flags multiplicity above three and wrong cost") {
  const Instance inst = make_instance({{1}}, {0}, {4}, {0}, {4});
  Solution sol;
  sol.multiplicities = {{{0, 0}, 4}};
  sol.total_cost = 3;
  const auto report = verify_solution(inst, sol, Semantics::DeclaredMmdc);
  CHECK_FALSE(report.find(check::kPairMultiplicity)->passed);
  CHECK_FALSE(report.find(check::kCost)->passed);
}

TEST_CASE("every generated instance validates") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int s = 1 + static_cast<int>(seed % 7);
    const int t = 1 + static_cast<int>((seed / 7) % 5);
    const Instance inst = generate_instance({s, t, seed, 50, 1 + static_cast<int>(seed % 5)});
    const auto report = validate_instance(inst);
    INFO("seed " << seed << ": " << report.summary());
    REQUIRE(report.passed());
  }
}

TEST_CASE("generator is deterministic by seed") {
  CHECK(generate_instance({5, 6, 42, 100, 3}) == generate_instance({5, 6, 42, 100, 3}));
  CHECK_FALSE(generate_instance({5, 6, 42, 100, 3}) == generate_instance({5, 6, 43, 100, 3}));
}

TEST_CASE("instance construction checks shapes") {
  CHECK_THROWS_AS(Instance(1, 2, {1}, {1}, {1}, {1, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(1, 1, {-1}, {1}, {1}, {1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(0, 1, {}, {}, {}, {1}, {1}), std::invalid_argument);
}
