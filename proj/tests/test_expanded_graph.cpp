#include <doctest.h>

#include "mmdc/errors.hpp"
#include "mmdc/expanded_graph.hpp"
#include "mmdc/generator.hpp"
#include "test_support.hpp"

using namespace mmdc;
using mmdc::testing::make_instance;
using mmdc::testing::uniform_bounds;

namespace {
constexpr VertexId a(int i) { return {VertexClass::A, i}; }
constexpr VertexId ap(int i) { return {VertexClass::APrime, i}; }
constexpr VertexId b(int j) { return {VertexClass::B, j}; }
constexpr VertexId bp(int j) { return {VertexClass::BPrime, j}; }
constexpr VertexId c(int k) { return {VertexClass::C, k}; }
}  // namespace

TEST_CASE("build: 1x1 balanced instance has no C") {
  const ExpandedGraph g(uniform_bounds({{5}}, 1));
  CHECK(g.h() == 0);
  CHECK(g.y_count() == 2);
  CHECK(g.cap(a(0)) == 1);
  CHECK(g.cap(ap(0)) == 0);
  CHECK(g.cap(b(0)) == 1);
  CHECK(g.cap(bp(0)) == 0);
  CHECK_FALSE(g.swapped());
}

TEST_CASE("build: surplus capacity becomes unit C vertices") {
  const ExpandedGraph g(make_instance({{1}, {1}}, {1, 1}, {2, 1}, {1}, {2}));
  CHECK(g.h() == 1);
  CHECK(g.cap(c(0)) == 1);
  CHECK(g.cap(ap(0)) == 1);
  CHECK(g.cap(ap(1)) == 0);
  CHECK(g.total_x_capacity() == g.total_y_capacity());
}

TEST_CASE("profits are w_max - w, and w_max on A'-C edges") {
  // h = 1 so that the A'-C edge exists.
  const auto g = ExpandedGraph::unchecked(make_instance({{7}}, {0}, {2}, {0}, {1}));
  REQUIRE(g.h() == 1);
  CHECK(g.w_max() == 7);
  CHECK(g.profit(a(0), b(0)) == 0);
  CHECK(g.profit(a(0), bp(0)) == 0);
  CHECK(g.profit(ap(0), b(0)) == 0);
  CHECK(g.profit(ap(0), c(0)) == 7);
  CHECK_FALSE(g.profit(ap(0), bp(0)).has_value());
  CHECK_FALSE(g.profit(a(0), c(0)).has_value());
}

TEST_CASE("neighbors follow the class-pair rule in deterministic order") {
  const ExpandedGraph g(make_instance({{1, 2}}, {1}, {3}, {1, 1}, {1, 1}));
  REQUIRE(g.h() == 1);
  CHECK(g.neighbors(a(0)) == std::vector<VertexId>{b(0), b(1), bp(0), bp(1)});
  CHECK(g.neighbors(ap(0)) == std::vector<VertexId>{b(0), b(1), c(0)});
  CHECK_THROWS_AS(g.neighbors(b(0)), ContractViolation);
}

TEST_CASE("B side with more capacity is swapped internally") {
  const Instance inst = make_instance({{1, 2, 3}}, {1}, {1}, {0, 0, 0}, {1, 1, 1});
  const ExpandedGraph g(inst);
  CHECK(g.swapped());
  CHECK(g.s() == 3);
  CHECK(g.t() == 1);
  CHECK(g.h() == 2);
  // internal a_3 is the original b_3; its edge to internal b_1 is original (1, 3)
  CHECK(g.original_pair(2, 0) == Pair{0, 2});
  CHECK(g.weight(2, 0) == 3);
}

TEST_CASE("rejected instances do not build") {
  CHECK_THROWS_AS(ExpandedGraph(make_instance({{1}}, {2}, {1}, {1}, {1})), RejectedInstance);
  // unchecked construction still builds a degree-infeasible instance
  const ExpandedGraph g = ExpandedGraph::unchecked(uniform_bounds({{1}}, 2));
  CHECK(g.cap(a(0)) == 2);
}

TEST_CASE("capacity balance and edge-class properties over generated instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int s = 1 + static_cast<int>(seed % 6);
    const int t = 1 + static_cast<int>((seed / 6) % 6);
    const ExpandedGraph g(generate_instance({s, t, seed, 30, 4}));
    CHECK(g.h() >= 0);
    CHECK(g.total_x_capacity() == g.total_y_capacity());
    for (int x = 0; x < g.x_count(); ++x) {
      for (int y = 0; y < g.y_count(); ++y) {
        const VertexId xv = g.x_vertex(x);
        const VertexId yv = g.y_vertex(y);
        const bool forbidden = (xv.cls == VertexClass::APrime && yv.cls == VertexClass::BPrime) ||
                               (xv.cls == VertexClass::A && yv.cls == VertexClass::C);
        CHECK(g.has_edge(x, y) == !forbidden);
        CHECK(g.x_index(xv) == x);
        CHECK(g.y_index(yv) == y);
      }
    }
  }
}
