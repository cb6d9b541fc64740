#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "psts/analysis.hpp"
#include "psts/constructions.hpp"
#include "psts/isomorphism.hpp"
#include "psts/verify.hpp"
#include "support.hpp"

using namespace psts;
using testing::error_of;

namespace {

std::vector<std::set<std::string>> as_label_sets(const Configuration& c, const std::vector<FreeSubgraph>& subs) {
  std::vector<std::set<std::string>> out;
  for (const auto& g : subs) {
    std::set<std::string> s;
    for (PointIndex p : g.vertices) s.insert(c.label(p));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointIndex> star(const Configuration& g, std::size_t i, std::size_t k) {
  std::vector<PointIndex> out;
  for (std::size_t j = 1; j <= k; ++j)
    if (j != i) out.push_back(g.index_of(std::to_string(std::min(i, j)) + "." + std::to_string(std::max(i, j))));
  std::sort(out.begin(), out.end());
  return out;
}

/// A spread of binomial configurations with assorted subgraph counts.
std::vector<Configuration> sample(std::uint64_t seed, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (std::size_t m = 1; m < n; ++m) out.push_back(perspective_system(random_perspective_data(n, m, rng)));
    if (n >= 4) {
      out.push_back(attach_complete(testing::xs(n), random_labelling(testing::xs(n), grassmannian(n), rng),
                                    grassmannian(n)));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("free containment by definition") {
    const auto g = grassmannian(5);
    const auto s1 = star(g, 1, 5);
    const auto w = is_freely_contained(g, s1);
    REQUIRE(w);
    CHECK(w->order() == 4);
    CHECK(w->vertices == s1);
    for (auto [a, b] : lex_pairs(4)) {
      CHECK(w->side(s1[a], s1[b]) == g.line_through(s1[a], s1[b]));
    }
    CHECK(w->side(s1[0], g.index_of("2.3")) == kNoLine);

    // three points of one line share a single side
    const std::vector<PointIndex> line{g.index_of("1.2"), g.index_of("1.3"), g.index_of("2.3")};
    CHECK_FALSE(is_freely_contained(g, line));
    // a quadrangle of the Fano plane: opposite sides meet outside
    const auto fano = testing::fano();
    const std::vector<PointIndex> quad{fano.index_of("0"), fano.index_of("1"), fano.index_of("2"), fano.index_of("5")};
    CHECK_FALSE(is_freely_contained(fano, quad));
    // non-collinear pair
    CHECK_FALSE(is_freely_contained(g, std::vector<PointIndex>{g.index_of("1.2"), g.index_of("3.4")}));
  }

  TEST_CASE("enumeration matches the oracle") {
    CHECK(enumerate_free_complete(grassmannian(4), 3).size() == 4);
    CHECK(enumerate_free_complete(grassmannian(5), 4).size() == 5);
    CHECK(enumerate_free_complete(veronesian(4), 5).size() == 3);
    for (const auto& c : sample(21, 5)) {
      const std::size_t n = *maximal_subgraph_order(c);
      CHECK(as_label_sets(c, enumerate_free_complete(c, n)) == oracle::free_complete(c, n));
      // other sizes too
      CHECK(as_label_sets(c, enumerate_free_complete(c, 3)) == oracle::free_complete(c, 3));
    }
  }

  TEST_CASE("enumeration is sorted and independent of the thread count") {
    for (const auto& c : sample(4, 7)) {
      const std::size_t n = *maximal_subgraph_order(c);
      const auto one = enumerate_free_complete(c, n, 1);
      CHECK(std::is_sorted(one.begin(), one.end()));
      CHECK(enumerate_free_complete(c, n, 3) == one);
    }
    for (std::size_t n = 6; n <= 8; ++n) CHECK(enumerate_free_complete(grassmannian(n + 1), n, 4).size() == n + 1);
  }

  TEST_CASE("maximal subgraph order") {
    CHECK(maximal_subgraph_order(grassmannian(6)) == 5u);
    CHECK_FALSE(maximal_subgraph_order(testing::fano()));
  }

  TEST_CASE("complement") {
    const auto g = grassmannian(5);
    const auto w = *is_freely_contained(g, star(g, 1, 5));
    const auto c = complement(g, w);
    CHECK(oracle::isomorphic(c, grassmannian(4)));
    CHECK(parameters(c).v == 6);
    CHECK(parameters(c).b == 4);
    CHECK(is_regular_subconfiguration(g, c));
    const auto small = *is_freely_contained(g, std::vector<PointIndex>{g.index_of("1.2"), g.index_of("1.3")});
    CHECK(error_of([&] { complement(g, small); }) == ErrorCode::SizeMismatch);
  }

  TEST_CASE("complement of complement reproduces the configuration") {
    for (const auto& c : sample(8, 5)) {
      const std::size_t n = *maximal_subgraph_order(c);
      for (const auto& w : enumerate_free_complete(c, n)) {
        const auto rest = complement(c, w);
        CHECK(binomial_index(rest)->m == n);
        CHECK(is_regular_subconfiguration(c, rest));
        const Labelling mu = side_labelling(c, w);
        CHECK(attach_complete(mu.domain, mu, rest) == c);
      }
    }
  }

  TEST_CASE("intersection structure of G(6,2)") {
    const auto g = grassmannian(6);
    const auto subs = enumerate_free_complete(g, 5);
    const auto s = intersection_structure(g, subs);
    CHECK(s.embedding_ok);
    std::set<PointIndex> centers(s.centers.begin(), s.centers.end());
    CHECK(centers.size() == 15);
    // each star S(i) meets S(j) at i.j
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        CHECK(g.label(s.center(i, j)) == std::to_string(i + 1) + "." + std::to_string(j + 1));
  }

  TEST_CASE("intersection structure errors") {
    const auto g = grassmannian(5);
    const auto subs = enumerate_free_complete(g, 4);
    CHECK(error_of([&] { intersection_structure(g, std::vector<FreeSubgraph>{subs[0], subs[0]}); }) ==
          ErrorCode::NotDistinct);
    FreeSubgraph a, b;
    a.vertices = {0, 1, 2, 3};
    b.vertices = {4, 5, 6, 7};
    CHECK(error_of([&] { intersection_structure(g, std::vector<FreeSubgraph>{a, b}); }) ==
          ErrorCode::SharedVertexNotUnique);
  }

  TEST_CASE("two-graph example meets at the apex") {
    const auto X = testing::xs(3);
    Labelling mu;
    mu.domain = X;
    mu.image = {"a", "b", "c"};
    const auto c = two_graph_example(testing::single_line(), X, mu, mu);
    std::vector<FreeSubgraph> pair;
    for (int level = 1; level <= 2; ++level) {
      std::vector<PointIndex> v{c.index_of("p")};
      for (const auto& x : X) v.push_back(c.index_of(simplex_label(x, level)));
      std::sort(v.begin(), v.end());
      pair.push_back(*is_freely_contained(c, v));
    }
    CHECK(c.label(intersection_structure(c, pair).center(0, 1)) == "p");
  }

  TEST_CASE("structure report sizes") {
    const auto g = grassmannian(6);
    const auto r = structure_report(g, enumerate_free_complete(g, 5));
    CHECK(r.axis_points.empty());
    CHECK(r.axis_lines.empty());

    PerspectiveData d;
    d.n = 4;
    d.m = 2;
    d.axis = testing::single_line();
    d.simplex_vertices = testing::xs(3);
    Labelling mu;
    mu.domain = d.simplex_vertices;
    mu.image = {"a", "b", "c"};
    d.mu = {mu, mu};
    d.xi.assign(2, std::vector<Permutation>(2, identity_permutation(3)));
    const auto c = perspective_system(d);
    std::vector<FreeSubgraph> designated;
    for (std::size_t i = 1; i <= 2; ++i) {
      std::vector<PointIndex> v{c.index_of("q:1.2")};
      for (const auto& x : d.simplex_vertices) v.push_back(c.index_of(simplex_label(x, i)));
      std::sort(v.begin(), v.end());
      designated.push_back(*is_freely_contained(c, v));
    }
    const auto s = structure_report(c, designated);
    CHECK(s.axis_points.size() == 3);
    CHECK(s.axis_lines.size() == 1);
    CHECK(s.axis.line_count() == 1);
    CHECK(oracle::isomorphic(s.axis, testing::single_line()));
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(s.private_vertices[i].size() == 3);
      CHECK(s.private_sides[i].size() == 3);
    }
  }

  TEST_CASE("structure report cardinalities over a sample") {
    for (const auto& c : sample(13, 6)) {
      const std::size_t n = *maximal_subgraph_order(c);
      const auto subs = enumerate_free_complete(c, n);
      if (subs.size() < 2) continue;
      const auto r = structure_report(c, subs);
      const std::size_t k = n + 1 - subs.size();
      CHECK(r.axis_points.size() == oracle::choose(k, 2));
      CHECK(r.axis_lines.size() == oracle::choose(k, 3));
      for (std::size_t i = 0; i < subs.size(); ++i) {
        CHECK(r.private_vertices[i].size() == n - subs.size() + 1);
        CHECK(r.private_sides[i].size() == oracle::choose(k, 2));
      }
    }
  }

  TEST_CASE("decompose round trip") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (std::size_t n = 3; n <= 6; ++n) {
      for (std::size_t m = 2; m < n; ++m) {
        for (int draw = 0; draw < 2; ++draw) {
          const auto c = perspective_system(random_perspective_data(n, m, rng));
          auto subs = enumerate_free_complete(c, n);
          // a Grassmannian outcome has n + 1 subgraphs; read it through the first m
          if (subs.size() == n + 1) subs.resize(m);
          const auto d = decompose(c, subs);
          CHECK(d.m == subs.size());
          CHECK(d.simplex_vertices.size() == n - d.m + 1);
          const auto back = perspective_system(d);
          CHECK(are_isomorphic(back, c));
          if (c.point_count() <= 15) CHECK(oracle::isomorphic(back, c));
          ++checked;
        }
      }
    }
    CHECK(checked >= 20);
  }

  TEST_CASE("decompose range and shapes") {
    const auto g = grassmannian(6);
    CHECK(error_of([&] { decompose(g, enumerate_free_complete(g, 5)); }) == ErrorCode::OutOfRange);
    const auto census = classify_veblen_labellings();
    for (const auto& cls : census.classes) {
      const auto subs = enumerate_free_complete(cls.configuration, 4);
      if (cls.free_k4 == 1) {
        CHECK(error_of([&] { decompose(cls.configuration, subs); }) == ErrorCode::OutOfRange);
      } else if (cls.free_k4 == 2) {
        const auto d = decompose(cls.configuration, subs);
        CHECK(d.axis.point_count() == 3);
        CHECK(d.axis.line_count() == 1);
      } else if (cls.free_k4 == 3) {
        const auto d = decompose(cls.configuration, subs);
        CHECK(d.axis.point_count() == 1);
        CHECK(d.simplex_vertices.size() == 2);
      }
    }
  }
}
