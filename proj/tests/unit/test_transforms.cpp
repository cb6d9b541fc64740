#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "psts/analysis.hpp"
#include "psts/constructions.hpp"
#include "psts/isomorphism.hpp"
#include "psts/transforms.hpp"
#include "psts/verify.hpp"
#include "support.hpp"

using namespace psts;
using testing::error_of;

namespace {

const CensusReport& census() {
  static const CensusReport report = classify_veblen_labellings();
  return report;
}

Configuration census_class(std::size_t count) {
  for (const auto& cls : census().classes)
    if (cls.free_k4 == count) return cls.configuration;
  FAIL("no census class with that count");
  return {};
}

std::size_t collinearity_changes(const Configuration& a, const Configuration& b) {
  std::size_t diff = 0;
  for (PointIndex x = 0; x < a.point_count(); ++x)
    for (PointIndex y = x + 1; y < a.point_count(); ++y) diff += a.collinear(x, y) != b.collinear(x, y);
  return diff;
}

bool on(const Configuration& c, LineIndex l, const std::string& label) {
  const Triple& t = c.line(l);
  const PointIndex p = c.index_of(label);
  return t[0] == p || t[1] == p || t[2] == p;
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("extending the fez class") {
    const auto fez = census_class(2);
    const auto out = extend_one_more(fez, enumerate_free_complete(fez, 3 + 1));
    CHECK(out.point_count() == 15);
    CHECK(binomial_index(out)->m == 6);
    CHECK(oracle::count_free(out, 5) == 3);
  }

  TEST_CASE("extension keeps old graphs and adds the fresh one") {
    for (std::size_t count : {1, 2, 3}) {
      const auto in = census_class(count);
      const auto subs = enumerate_free_complete(in, 4);
      const auto out = extend_one_more(in, subs);
      const auto fresh = extension_labels(in);
      REQUIRE(fresh.size() == 5);
      std::vector<std::set<std::string>> expected;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        std::set<std::string> s{fresh[i]};
        for (PointIndex p : subs[i].vertices) s.insert(in.label(p));
        expected.push_back(s);
      }
      expected.emplace_back(fresh.begin(), fresh.end());
      std::sort(expected.begin(), expected.end());
      CHECK(oracle::free_complete(out, 5) == expected);
      CHECK(is_regular_subconfiguration(out, in));
    }
  }

  TEST_CASE("extending a configuration with no maximal graph") {
    const auto fez = census_class(2);
    const auto subs = enumerate_free_complete(fez, 4);
    const auto zero = swap_kill(fez, find_swap_candidates(fez, subs[0], subs[1]).front());
    REQUIRE(enumerate_free_complete(zero, 4).empty());
    const auto out = extend_one_more(zero, {});
    CHECK(oracle::count_free(out, 5) == 1);
  }

  TEST_CASE("extension errors") {
    const auto g5 = grassmannian(5);
    CHECK(error_of([&] { extend_one_more(g5, enumerate_free_complete(g5, 4)); }) == ErrorCode::TooManySubgraphs);
    const auto fez = census_class(2);
    const auto subs = enumerate_free_complete(fez, 4);
    CHECK(error_of([&] { extend_one_more(fez, {subs[0]}); }) == ErrorCode::EnumerationNotComplete);
    CHECK(error_of([&] { extend_one_more(testing::fano(), {}); }) == ErrorCode::NotBinomial);
    const auto small = *is_freely_contained(fez, std::vector<PointIndex>{subs[0].vertices[0], subs[0].vertices[1]});
    CHECK(error_of([&] { extend_one_more(fez, {small}); }) == ErrorCode::SizeMismatch);
  }

  TEST_CASE("extension labels avoid existing points") {
    const auto g = grassmannian(5);
    CHECK(extension_labels(g) == std::vector<std::string>{"e6_1", "e6_2", "e6_3", "e6_4", "e6_5"});
    RawConfiguration raw = g.to_raw();
    auto rename = [](std::string& x) {
      if (x == "1.2") x = "e6_1";
      if (x == "1.3") x = "e6'_7";
    };
    for (auto& x : raw.points) rename(x);
    for (auto& line : raw.lines)
      for (auto& x : line) rename(x);
    const auto labels = extension_labels(validate_configuration(raw));
    CHECK(labels.front() == "e6''_1");
    CHECK(labels.size() == 5);
  }

  TEST_CASE("swap candidates on the fez class") {
    const auto fez = census_class(2);
    const auto subs = enumerate_free_complete(fez, 4);
    const auto certs = find_swap_candidates(fez, subs[0], subs[1]);
    REQUIRE_FALSE(certs.empty());
    CHECK(std::is_sorted(certs.begin(), certs.end()));
    for (const auto& c : certs) {
      const LineIndex side1 = fez.line_through(fez.index_of(c.a1), fez.index_of(c.b1));
      const LineIndex side2 = fez.line_through(fez.index_of(c.a2), fez.index_of(c.b2));
      CHECK(on(fez, side1, c.q));
      CHECK(on(fez, side2, c.q));
      CHECK_FALSE(on(fez, fez.line_through(fez.index_of(c.p), fez.index_of(c.a1)), c.b2));
      CHECK_FALSE(on(fez, fez.line_through(fez.index_of(c.p), fez.index_of(c.b1)), c.a2));
    }
  }

  TEST_CASE("swap candidates are symmetric in the two graphs") {
    const auto fez = census_class(2);
    const auto subs = enumerate_free_complete(fez, 4);
    auto effect = [](const std::vector<SwapCertificate>& certs) {
      std::set<std::set<std::set<std::string>>> out;
      for (const auto& c : certs) out.insert({{c.q, c.a1, c.b2}, {c.q, c.b1, c.a2}});
      return out;
    };
    CHECK(effect(find_swap_candidates(fez, subs[0], subs[1])) == effect(find_swap_candidates(fez, subs[1], subs[0])));
  }

  TEST_CASE("swap candidate errors") {
    const auto g5 = grassmannian(5);
    const auto subs = enumerate_free_complete(g5, 4);
    CHECK(error_of([&] { find_swap_candidates(g5, subs[0], subs[1]); }) == ErrorCode::NotExactlyTwo);
    const auto fez = census_class(2);
    const auto fez_subs = enumerate_free_complete(fez, 4);
    CHECK(error_of([&] { find_swap_candidates(fez, fez_subs[0], fez_subs[0]); }) == ErrorCode::NotExactlyTwo);
  }

  TEST_CASE("every admissible swap kills the fez") {
    const auto fez = census_class(2);
    const auto subs = enumerate_free_complete(fez, 4);
    for (const auto& cert : find_swap_candidates(fez, subs[0], subs[1])) {
      const auto out = swap_kill(fez, cert);
      CHECK(oracle::count_free(out, 4) == 0);
      CHECK(parameters(out) == parameters(fez));
      CHECK(collinearity_changes(fez, out) == 4);
      CHECK(out.contains_line(cert.q, cert.a1, cert.b2));
      CHECK(out.contains_line(cert.q, cert.b1, cert.a2));
      CHECK_FALSE(out.contains_line(cert.q, cert.a1, cert.b1));
    }
  }

  TEST_CASE("swap kill with a two-graph input of order five") {
    const auto veblen = grassmannian(4);
    const auto X = testing::xs(4);
    const auto mu1 = testing::natural_labelling(X);
    Labelling mu2 = mu1;
    bool done = false;
    while (!done && std::next_permutation(mu2.image.begin(), mu2.image.end())) {
      const auto c = two_graph_example(veblen, X, mu1, mu2);
      const auto subs = enumerate_free_complete(c, 5);
      if (subs.size() != 2) continue;
      const auto out = swap_kill(c, find_swap_candidates(c, subs[0], subs[1]).front());
      CHECK(out.point_count() == 15);
      CHECK(oracle::count_free(out, 5) == 0);
      done = true;
    }
    CHECK(done);
  }

  TEST_CASE("stale and conflicting certificates") {
    const auto fez = census_class(2);
    const auto subs = enumerate_free_complete(fez, 4);
    const auto cert = find_swap_candidates(fez, subs[0], subs[1]).front();
    auto ghost = cert;
    ghost.q = "nowhere";
    CHECK(error_of([&] { swap_kill(fez, ghost); }) == ErrorCode::CertificateStale);
    auto flipped = cert;
    std::swap(flipped.a1, flipped.q);
    CHECK(error_of([&] { swap_kill(fez, flipped); }) == ErrorCode::CertificateStale);
    const auto after = swap_kill(fez, cert);
    CHECK(error_of([&] { swap_kill(after, cert); }) == ErrorCode::CertificateStale);

    // some certificate-shaped tuple on G(5,2) must collide with an existing line
    const auto g = grassmannian(5);
    bool collided = false;
    const auto labels = std::vector<std::string>(g.labels().begin(), g.labels().end());
    for (const auto& q : labels) {
      for (LineIndex l1 : g.lines_through(g.index_of(q))) {
        for (LineIndex l2 : g.lines_through(g.index_of(q))) {
          if (l1 == l2 || collided) continue;
          std::vector<std::string> r1, r2;
          for (PointIndex p : g.line(l1))
            if (g.label(p) != q) r1.push_back(g.label(p));
          for (PointIndex p : g.line(l2))
            if (g.label(p) != q) r2.push_back(g.label(p));
          for (const auto& p : labels) {
            for (const SwapCertificate& c : {SwapCertificate{p, r1[0], r1[1], r2[0], r2[1], q},
                                             SwapCertificate{p, r1[0], r1[1], r2[1], r2[0], q}}) {
              try {
                swap_kill(g, c);
              } catch (const Error& e) {
                if (e.code() == ErrorCode::AxiomViolation) collided = true;
              }
            }
          }
        }
      }
    }
    CHECK(collided);
  }
}
