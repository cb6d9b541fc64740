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

std::vector<PointIndex> indices(const Configuration& c, const std::vector<std::string>& labels) {
  std::vector<PointIndex> out;
  for (const auto& l : labels) out.push_back(c.index_of(l));
  return out;
}

PerspectiveData shape(std::size_t n, std::size_t m, Configuration axis) {
  PerspectiveData d;
  d.n = n;
  d.m = m;
  d.axis = std::move(axis);
  d.simplex_vertices = testing::xs(n - m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Labelling mu;
    mu.domain = d.simplex_vertices;
    mu.image.assign(d.axis.labels().begin(), d.axis.labels().end());
    d.mu.push_back(mu);
  }
  d.xi.assign(m, std::vector<Permutation>(m, identity_permutation(n - m + 1)));
  return d;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("grassmannian parameters") {
    const auto g3 = grassmannian(3);
    CHECK(parameters(g3).v == 3);
    CHECK(parameters(g3).b == 1);
    const auto g4 = grassmannian(4);
    CHECK(parameters(g4).v == 6);
    CHECK(parameters(g4).b == 4);
    CHECK(parameters(g4).constant_rank() == 2);
    const auto g5 = grassmannian(5);
    CHECK(parameters(g5).v == 10);
    CHECK(parameters(g5).b == 10);
    CHECK(parameters(g5).constant_rank() == 3);
    CHECK(g5.contains_line("1.2", "1.3", "2.3"));
    CHECK(error_of([] { grassmannian(2); }) == ErrorCode::SizeTooSmall);
  }

  TEST_CASE("grassmannian freely contains n+1 complete graphs") {
    for (std::size_t n = 3; n <= 5; ++n) CHECK(oracle::count_free(grassmannian(n + 1), n) == n + 1);
  }

  TEST_CASE("attach onto Veblen") {
    const auto veblen = grassmannian(4);
    const auto X = testing::xs(4);
    const auto natural = attach_complete(X, testing::natural_labelling(X), veblen);
    CHECK(binomial_index(natural)->m == 5);
    CHECK(oracle::isomorphic(natural, grassmannian(5)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const auto mu = random_labelling(X, veblen, rng);
      const auto c = attach_complete(X, mu, veblen);
      CHECK(c.point_count() == 10);
      CHECK(c.line_count() == 10);
      CHECK(binomial_index(c)->m == 5);
      CHECK(is_freely_contained(c, indices(c, X)));
      const auto found = oracle::free_complete(c, 4);
      CHECK(std::find(found.begin(), found.end(), std::set<std::string>(X.begin(), X.end())) != found.end());
    }
  }

  TEST_CASE("attach errors") {
    const auto veblen = grassmannian(4);
    const auto X = testing::xs(4);
    const auto mu = testing::natural_labelling(X);
    CHECK(error_of([&] { attach_complete(X, mu, testing::fano()); }) == ErrorCode::NotBinomial);
    CHECK(error_of([&] { attach_complete(testing::xs(3), mu, veblen); }) == ErrorCode::SizeMismatch);
    auto clash = X;
    clash[0] = "1.2";
    CHECK(error_of([&] { attach_complete(clash, mu, veblen); }) == ErrorCode::NotDisjoint);
    auto twice = mu;
    twice.image[1] = twice.image[0];
    CHECK(error_of([&] { attach_complete(X, twice, veblen); }) == ErrorCode::NotBijective);
  }

  TEST_CASE("perspective point count identity") {
    for (std::size_t n = 2; n <= 8; ++n)
      for (std::size_t m = 1; m < n; ++m)
        CHECK(oracle::choose(n + 1 - m, 2) + m * (n - m + 1) + oracle::choose(m, 2) == oracle::choose(n + 1, 2));
  }

  TEST_CASE("multiveblen and triangle perspective shapes") {
    const auto multiveblen = perspective_system(shape(4, 3, single_point()));
    CHECK(multiveblen.point_count() == 10);
    CHECK(binomial_index(multiveblen)->m == 5);
    CHECK(oracle::count_free(multiveblen, 4) >= 3);

    const auto triangles = perspective_system(shape(4, 2, testing::single_line()));
    CHECK(triangles.point_count() == 10);
    CHECK(oracle::count_free(triangles, 4) >= 2);
  }

  TEST_CASE("perspective systems contain their simplices") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 3; n <= 6; ++n) {
      for (std::size_t m = 1; m < n; ++m) {
        const auto d = random_perspective_data(n, m, rng);
        const auto c = perspective_system(d);
        CHECK(binomial_index(c)->m == n + 1);
        for (std::size_t i = 1; i <= m; ++i) {
          std::vector<std::string> xi;
          for (const auto& x : d.simplex_vertices) xi.push_back(simplex_label(x, i));
          for (std::size_t j = 1; j <= m; ++j)
            if (j != i) xi.push_back(center_label(i, j));
          CHECK(is_freely_contained(c, indices(c, xi)));
          // (a,i) + q{i,j} = (xi_ij(a), j)
          for (std::size_t j = 1; j <= m; ++j) {
            if (j == i) continue;
            for (std::size_t a = 0; a < d.simplex_vertices.size(); ++a) {
              CHECK(c.contains_line(center_label(i, j), simplex_label(d.simplex_vertices[a], i),
                                    simplex_label(d.simplex_vertices[d.xi[i - 1][j - 1][a]], j)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("perspective with m = 1 is an attachment") {
    std::mt19937_64 rng(9);
    const auto d = random_perspective_data(4, 1, rng);
    const auto direct = attach_complete(d.simplex_vertices, d.mu[0], grassmannian(4));
    CHECK(oracle::isomorphic(perspective_system(d), direct));
  }

  TEST_CASE("perspective errors") {
    auto d = shape(4, 2, testing::single_line());
    auto wrong_axis = d;
    wrong_axis.axis = grassmannian(4);
    CHECK(error_of([&] { perspective_system(wrong_axis); }) == ErrorCode::AxisIndexMismatch);
    auto not_inverse = d;
    not_inverse.xi[0][1] = {1, 2, 0};
    not_inverse.xi[1][0] = {1, 2, 0};
    CHECK(error_of([&] { perspective_system(not_inverse); }) == ErrorCode::XiNotInvolutivePair);
    auto diagonal = d;
    diagonal.xi[1][1] = {1, 0, 2};
    CHECK(error_of([&] { perspective_system(diagonal); }) == ErrorCode::XiDiagonalNotIdentity);
    auto bad_perm = d;
    bad_perm.xi[0][1] = {0, 0, 1};
    CHECK(error_of([&] { perspective_system(bad_perm); }) == ErrorCode::NotBijective);
  }

  TEST_CASE("veronesian") {
    CHECK(error_of([] { veronesian(1); }) == ErrorCode::SizeTooSmall);
    CHECK(oracle::isomorphic(veronesian(2), grassmannian(4)));
    const auto v3 = veronesian(3);
    CHECK(v3.point_count() == 10);
    CHECK(v3.line_count() == 10);
    CHECK(oracle::count_free(v3, 4) == 3);
    for (std::size_t k = 2; k <= 6; ++k) {
      const auto v = veronesian(k);
      std::uint64_t presentations = 0;
      for (std::size_t r = 1; r <= k; ++r) presentations += oracle::choose(k - r + 2, 2);
      CHECK(presentations == oracle::choose(k + 2, 3));
      CHECK(v.line_count() == presentations);  // nothing deduplicated
      CHECK(v.point_count() == oracle::choose(k + 2, 2));
      CHECK(binomial_index(v)->m == k + 2);
    }
  }

  TEST_CASE("veronesian faces are the only maximal complete graphs") {
    for (std::size_t k = 3; k <= 5; ++k) {
      const auto v = veronesian(k);
      std::vector<std::set<std::string>> faces(3);
      for (const auto& label : v.labels()) {
        for (int skip = 0; skip < 3; ++skip) {
          if (label.find(std::string(1, static_cast<char>('a' + skip)) + "^0") != std::string::npos) {
            faces[skip].insert(label);
          }
        }
      }
      std::sort(faces.begin(), faces.end());
      CHECK(oracle::free_complete(v, k + 1) == faces);
    }
  }

  TEST_CASE("two-graph example on a line") {
    const auto X = testing::xs(3);
    const auto line = testing::single_line();
    Labelling mu;
    mu.domain = X;
    mu.image = {"a", "b", "c"};
    const auto c = two_graph_example(line, X, mu, mu);
    CHECK(c.point_count() == 10);
    CHECK(binomial_index(c)->m == 5);
    CHECK(oracle::count_free(c, 4) >= 2);
    CHECK(error_of([&] { two_graph_example(line, testing::xs(4), mu, mu); }) == ErrorCode::SizeMismatch);
    auto bad = mu;
    bad.image[2] = "a";
    CHECK(error_of([&] { two_graph_example(line, X, mu, bad); }) == ErrorCode::NotBijective);
  }

  TEST_CASE("two-graph complements follow the labellings") {
    const auto veblen = grassmannian(4);
    const auto X = testing::xs(4);
    auto complements = [&](const Labelling& mu1, const Labelling& mu2) {
      const auto c = two_graph_example(veblen, X, mu1, mu2);
      std::vector<Configuration> out;
      for (int level = 1; level <= 2; ++level) {
        std::vector<std::string> g{"p"};
        for (const auto& x : X) g.push_back(simplex_label(x, level));
        const auto sub = is_freely_contained(c, indices(c, g));
        REQUIRE(sub);
        out.push_back(complement(c, *sub));
      }
      return out;
    };
    const auto mu1 = testing::natural_labelling(X);
    const auto same = complements(mu1, mu1);
    CHECK(oracle::isomorphic(same[0], same[1]));

    // search for a second labelling giving a different attachment
    Labelling mu2 = mu1;
    bool found = false;
    const auto first = attach_complete(X, mu1, veblen);
    while (std::next_permutation(mu2.image.begin(), mu2.image.end())) {
      if (!are_isomorphic(first, attach_complete(X, mu2, veblen))) {
        found = true;
        break;
      }
    }
    REQUIRE(found);
    const auto differ = complements(mu1, mu2);
    CHECK_FALSE(oracle::isomorphic(differ[0], differ[1]));
  }

  TEST_CASE("labelling and permutation helpers") {
    const Permutation p{2, 0, 1};
    CHECK(inverse(p) == Permutation{1, 2, 0});
    CHECK(inverse(inverse(p)) == p);
    CHECK(identity_permutation(3) == Permutation{0, 1, 2});
    CHECK(error_of([] { check_permutation({0, 1}, 3); }) == ErrorCode::SizeMismatch);
    CHECK(axis_label("1.2") == "z:1.2");
    CHECK(simplex_label("x", 2) == "s:x:2");
    CHECK(center_label(3, 1) == "q:1.3");
    const auto mu = testing::natural_labelling(testing::xs(4));
    CHECK(mu.at(2, 0) == "1.3");
  }
}
