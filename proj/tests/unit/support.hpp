#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "psts/configuration.hpp"
#include "psts/constructions.hpp"
#include "psts/error.hpp"

namespace testing {

/// Error code raised by `f`, failing the test when nothing is thrown.
template <typename F>
psts::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const psts::Error& e) {
    return e.code();
  }
  FAIL("expected a psts::Error");
  return psts::ErrorCode::PropertyFailure;
}

inline psts::Configuration make(std::vector<std::string> points, std::vector<std::vector<std::string>> lines) {
  return psts::validate_configuration({std::move(points), std::move(lines)});
}

inline psts::Configuration single_line() { return make({"a", "b", "c"}, {{"a", "b", "c"}}); }

inline psts::Configuration fano() {
  return make({"0", "1", "2", "3", "4", "5", "6"},
              {{"0", "1", "3"}, {"1", "2", "4"}, {"2", "3", "5"}, {"3", "4", "6"},
               {"4", "5", "0"}, {"5", "6", "1"}, {"6", "0", "2"}});
}

/// Same structure under fresh labels "r<k>" assigned in shuffled order.
inline psts::Configuration relabelled(const psts::Configuration& config, std::mt19937_64& rng) {
  std::vector<std::size_t> order(config.point_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  auto name = [&](psts::PointIndex p) { return "r" + std::to_string(order[p]); };
  psts::RawConfiguration raw;
  for (psts::PointIndex p = 0; p < config.point_count(); ++p) raw.points.push_back(name(p));
  for (const auto& t : config.lines()) raw.lines.push_back({name(t[0]), name(t[1]), name(t[2])});
  return psts::validate_configuration(raw);
}

inline std::vector<std::string> xs(std::size_t k, const std::string& prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// {i,j} -> "i.j" over vertices 1..k: the natural labelling onto G(k,2).
inline psts::Labelling natural_labelling(const std::vector<std::string>& vertices) {
  psts::Labelling mu;
  mu.domain = vertices;
  const std::size_t k = vertices.size();
  for (auto [i, j] : psts::lex_pairs(k)) mu.image.push_back(std::to_string(i + 1) + "." + std::to_string(j + 1));
  return mu;
}

}  // namespace testing
