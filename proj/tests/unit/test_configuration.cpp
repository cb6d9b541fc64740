#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "psts/configuration.hpp"
#include "psts/constructions.hpp"
#include "psts/error.hpp"
#include "support.hpp"

using namespace psts;
using testing::error_of;
using testing::make;

TEST_SUITE("incidence_core") {
  TEST_CASE("single line") {
    const auto c = testing::single_line();
    CHECK(c.point_count() == 3);
    CHECK(c.line_count() == 1);
    CHECK(c.line_through(0, 2) == 0);
    CHECK(c.third_point(0, 0, 2) == 1);
    CHECK(c.collinear(0, 1));
    CHECK_FALSE(c.collinear(1, 1));
    CHECK(c.contains_line("c", "a", "b"));
    const auto p = parameters(c);
    CHECK(p.v == 3);
    CHECK(p.b == 1);
    CHECK(p.constant_rank() == 1);
    REQUIRE(binomial_index(c));
    CHECK(binomial_index(c)->m == 3);
  }

  TEST_CASE("labels index in byte order") {
    const auto c = make({"z", "b", "a"}, {{"z", "a", "b"}});
    CHECK(c.label(0) == "a");
    CHECK(c.label(2) == "z");
    CHECK(c.index_of("b") == 1);
    CHECK_FALSE(c.find("q"));
    CHECK(error_of([&] { c.index_of("q"); }) == ErrorCode::UnknownPoint);
  }

  TEST_CASE("axiom violations") {
    CHECK(error_of([] { make({"a", "a", "b"}, {}); }) == ErrorCode::DuplicatePoint);
    CHECK(error_of([] { make({"a", "b", "c"}, {{"a", "b", "c"}, {"c", "b", "a"}}); }) == ErrorCode::DuplicateLine);
    CHECK(error_of([] { make({"a", "b", "c"}, {{"a", "b"}}); }) == ErrorCode::LineNotTriple);
    CHECK(error_of([] { make({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}}); }) == ErrorCode::LineNotTriple);
    CHECK(error_of([] { make({"a", "b", "c"}, {{"a", "a", "b"}}); }) == ErrorCode::LineNotTriple);
    CHECK(error_of([] { make({"a", "b", "c"}, {{"a", "b", "d"}}); }) == ErrorCode::UnknownPointInLine);
    CHECK(error_of([] { make({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}}); }) ==
          ErrorCode::TwoPointsOnTwoLines);
    CHECK(error_of([] { make({"a b", "c", "d"}, {}); }) == ErrorCode::InvalidLabel);
    CHECK(error_of([] { make({"", "c", "d"}, {}); }) == ErrorCode::InvalidLabel);
  }

  TEST_CASE("error text carries the name") {
    try {
      make({"a", "a"}, {});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).starts_with("DuplicatePoint: "));
      CHECK(e.name() == "DuplicatePoint");
    }
  }

  TEST_CASE("binomial index") {
    for (std::size_t n = 3; n <= 9; ++n) {
      const auto g = grassmannian(n);
      REQUIRE(binomial_index(g));
      CHECK(binomial_index(g)->m == n);
      CHECK(parameters(g).v == oracle::choose(n, 2));
      CHECK(parameters(g).b == oracle::choose(n, 3));
    }
    CHECK_FALSE(binomial_index(testing::fano()));
    CHECK_FALSE(binomial_index(Configuration{}));
    CHECK(binomial_index(single_point())->m == 2);
    const auto short_of_lines = make({"1", "2", "3", "4", "5", "6"}, {{"1", "2", "3"}, {"1", "4", "5"}, {"2", "4", "6"}});
    CHECK_FALSE(binomial_index(short_of_lines));
  }

  TEST_CASE("collinearity graph") {
    const auto g = grassmannian(5);
    const auto graph = collinearity_graph(g);
    CHECK(graph.vertex_count() == 10);
    CHECK(graph.edge_count() == 3 * g.line_count());
    for (const auto& e : graph.edges()) {
      CHECK(graph.adjacent(e.a, e.b));
      CHECK(g.line_through(e.a, e.b) == e.line);
    }
    CHECK(graph.neighbours(0).size() == 2 * g.rank(0));
  }

  TEST_CASE("regular subconfigurations") {
    const auto g = grassmannian(5);
    CHECK(is_regular_subconfiguration(g, make({"1.2", "1.3", "2.3"}, {{"1.2", "1.3", "2.3"}})));
    CHECK_FALSE(is_regular_subconfiguration(g, make({"1.2", "1.3", "2.3"}, {})));
    CHECK(is_regular_subconfiguration(g, grassmannian(4)));
    CHECK(error_of([&] { is_regular_subconfiguration(g, make({"9.9"}, {})); }) == ErrorCode::PointsNotSubset);
  }

  TEST_CASE("pair_index agrees with lex_pairs") {
    for (std::size_t k = 0; k <= 9; ++k) {
      const auto pairs = lex_pairs(k);
      CHECK(pairs.size() == oracle::choose(k, 2));
      for (std::size_t t = 0; t < pairs.size(); ++t) CHECK(pair_index(pairs[t].first, pairs[t].second, k) == t);
    }
  }

  TEST_CASE("permuting points keeps the isomorphism class") {
    std::mt19937_64 rng(7);
    const auto g = grassmannian(5);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PointIndex> perm(g.point_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto h = permute_points(g, perm);
      CHECK(parameters(h) == parameters(g));
      CHECK(oracle::isomorphic(g, h));
      CHECK(validate_configuration(h.to_raw()) == h);
    }
  }

  TEST_CASE("induced configuration") {
    const auto g = grassmannian(5);
    std::vector<PointIndex> pts{g.index_of("1.2"), g.index_of("1.3"), g.index_of("2.3")};
    std::vector<LineIndex> lines{g.line_through(pts[0], pts[1])};
    const auto sub = induced_configuration(g, pts, lines);
    CHECK(sub == make({"1.2", "1.3", "2.3"}, {{"1.2", "1.3", "2.3"}}));
  }
}
