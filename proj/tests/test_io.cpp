#include <doctest.h>

#include "mmdc/errors.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/io.hpp"
#include "test_support.hpp"

using namespace mmdc;

TEST_CASE("parse_instance: minimal file") {
  const Instance inst = parse_instance("mmdc 1\n1 1\n5\n1\n1\n1\n1");
  CHECK(inst == mmdc::testing::uniform_bounds({{5}}, 1));
}

TEST_CASE("parse_instance ignores comments and blank lines") {
  const Instance inst = parse_instance("# header\nmmdc 1\n\n2 1\n2\n3\n# demands\n1 1\n1 1\n1\n2\n");
  CHECK(inst.s() == 2);
  CHECK(inst.weight(1, 0) == 3);
  CHECK(inst.cap_b() == std::vector<int>{2});
}

TEST_CASE("parse_instance errors carry line numbers") {
  SUBCASE("missing cap_b line") {
    try {
      parse_instance("mmdc 1\n1 1\n5\n1\n1\n1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("expected 6+s=7") != std::string::npos);
      CHECK(e.line() == 6);
    }
  }
  SUBCASE("unsupported version") {
    try {
      parse_instance("mmdc 2\n1 1\n5\n1\n1\n1\n1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("unsupported format version") != std::string::npos);
      CHECK(e.line() == 1);
      CHECK(e.column() == 6);
    }
  }
  SUBCASE("negative number") {
    try {
      parse_instance("mmdc 1\n1 2\n5 -1\n1\n1\n1 1\n1 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
  }
  SUBCASE("wrong count on a row") {
    CHECK_THROWS_AS(parse_instance("mmdc 1\n1 2\n5\n1\n1\n1 1\n1 1\n"), ParseError);
  }
  SUBCASE("demand above capacity") {
    try {
      parse_instance("mmdc 1\n2 1\n1\n1\n1 2\n1 1\n1\n2\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 6);
      CHECK(e.column() == 3);
    }
  }
}

TEST_CASE("write_solution format") {
  Solution sol;
  sol.total_cost = 5;
  sol.multiplicities = {{{0, 0}, 1}};
  CHECK(write_solution(sol, false) == "cost 5\n1 1 1\n");

  CHECK(write_solution(Solution{}, false) == "cost 0\n");

  Solution triple;
  triple.total_cost = 3;
  triple.multiplicities = {{{0, 0}, 3}};
  CHECK(write_solution(triple, false) == "cost 3\n1 1 3\n");

  Solution sorted;
  sorted.multiplicities = {{{1, 0}, 1}, {{0, 2}, 2}, {{0, 1}, 1}};
  CHECK(write_solution(sorted, false) == "cost 0\n1 2 1\n1 3 2\n2 1 1\n");

  const std::string with_stats = write_solution(sol);
  CHECK(with_stats.rfind("cost 5\n1 1 1\n# stats: ", 0) == 0);
}

TEST_CASE("instance and solution text round-trips") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = generate_instance({1 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 4), seed, 1000, 4});
    const std::string text = write_instance(inst);
    CHECK(parse_instance(text) == inst);
    CHECK(write_instance(parse_instance(text)) == text);
  }
  Solution sol;
  sol.total_cost = 17;
  sol.multiplicities = {{{0, 1}, 2}, {{2, 0}, 3}};
  const Solution back = parse_solution(write_solution(sol));
  CHECK(back.total_cost == 17);
  CHECK(back.multiplicities == sol.multiplicities);
}
