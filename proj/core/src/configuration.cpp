#include "psts/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "psts/error.hpp"

namespace psts {

namespace {

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

std::string join3(const std::string& a, const std::string& b, const std::string& c) {
  return "{" + a + "," + b + "," + c + "}";
}

}  // namespace

std::optional<PointIndex> Configuration::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& l, std::string_view x) { return l < x; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<PointIndex>(it - labels_.begin());
}

PointIndex Configuration::index_of(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw Error(ErrorCode::UnknownPoint, "no point labelled '" + std::string(label) + "'");
}

PointIndex Configuration::third_point(LineIndex l, PointIndex a, PointIndex b) const {
  for (PointIndex p : lines_.at(l)) {
    if (p != a && p != b) return p;
  }
  return lines_.at(l)[0];
}

std::optional<LineIndex> Configuration::find_line(Triple t) const {
  std::sort(t.begin(), t.end());
  auto it = std::lower_bound(lines_.begin(), lines_.end(), t);
  if (it == lines_.end() || *it != t) return std::nullopt;
  return static_cast<LineIndex>(it - lines_.begin());
}

bool Configuration::contains_line(std::string_view a, std::string_view b,
                                  std::string_view c) const {
  auto pa = find(a), pb = find(b), pc = find(c);
  if (!pa || !pb || !pc) return false;
  return find_line({*pa, *pb, *pc}).has_value();
}

RawConfiguration Configuration::to_raw() const {
  RawConfiguration raw;
  raw.points = labels_;
  raw.lines.reserve(lines_.size());
  for (const Triple& t : lines_) {
    raw.lines.push_back({labels_[t[0]], labels_[t[1]], labels_[t[2]]});
  }
  return raw;
}

Configuration validate_configuration(const RawConfiguration& raw) {
  Configuration config;
  for (const std::string& label : raw.points) {
    if (!valid_label(label)) {
      throw Error(ErrorCode::InvalidLabel, "point label '" + label + "' is empty or has whitespace");
    }
  }
  config.labels_ = raw.points;
  std::sort(config.labels_.begin(), config.labels_.end());
  if (auto dup = std::adjacent_find(config.labels_.begin(), config.labels_.end());
      dup != config.labels_.end()) {
    throw Error(ErrorCode::DuplicatePoint, "point '" + *dup + "' declared twice");
  }

  const std::size_t v = config.labels_.size();
  config.lines_.reserve(raw.lines.size());
  for (const auto& members : raw.lines) {
    if (members.size() != 3) {
      std::string listed;
      for (const auto& m : members) listed += (listed.empty() ? "" : ",") + m;
      throw Error(ErrorCode::LineNotTriple,
                  "line {" + listed + "} has " + std::to_string(members.size()) + " members");
    }
    Triple t{};
    for (std::size_t k = 0; k < 3; ++k) {
      auto p = config.find(members[k]);
      if (!p) {
        throw Error(ErrorCode::UnknownPointInLine,
                    "line " + join3(members[0], members[1], members[2]) + " uses undeclared point '" +
                        members[k] + "'");
      }
      t[k] = *p;
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw Error(ErrorCode::LineNotTriple,
                  "line " + join3(members[0], members[1], members[2]) + " repeats a point");
    }
    config.lines_.push_back(t);
  }
  std::sort(config.lines_.begin(), config.lines_.end());
  if (auto dup = std::adjacent_find(config.lines_.begin(), config.lines_.end());
      dup != config.lines_.end()) {
    const auto& l = config.labels_;
    throw Error(ErrorCode::DuplicateLine,
                "line " + join3(l[(*dup)[0]], l[(*dup)[1]], l[(*dup)[2]]) + " listed twice");
  }

  config.pair_line_.assign(v * v, kNoLine);
  config.incidence_.assign(v, {});
  for (LineIndex li = 0; li < config.lines_.size(); ++li) {
    const Triple& t = config.lines_[li];
    for (int x = 0; x < 3; ++x) {
      for (int y = x + 1; y < 3; ++y) {
        auto& slot_xy = config.pair_line_[t[x] * v + t[y]];
        if (slot_xy != kNoLine) {
          const auto& l = config.labels_;
          const Triple& other = config.lines_[slot_xy];
          throw Error(ErrorCode::TwoPointsOnTwoLines,
                      "points " + l[t[x]] + " and " + l[t[y]] + " lie on both " +
                          join3(l[other[0]], l[other[1]], l[other[2]]) + " and " +
                          join3(l[t[0]], l[t[1]], l[t[2]]));
        }
        slot_xy = li;
        config.pair_line_[t[y] * v + t[x]] = li;
      }
      config.incidence_[t[x]].push_back(li);
    }
  }
  return config;
}

std::optional<std::size_t> ConfigParams::constant_rank() const {
  if (rank_profile.size() != 1) return std::nullopt;
  return rank_profile.begin()->first;
}

ConfigParams parameters(const Configuration& config) {
  ConfigParams params;
  params.v = config.point_count();
  params.b = config.line_count();
  for (PointIndex p = 0; p < config.point_count(); ++p) ++params.rank_profile[config.rank(p)];
  return params;
}

std::optional<BinomialIndex> binomial_index(const Configuration& config) {
  const std::size_t v = config.point_count();
  if (v == 0) return std::nullopt;
  std::size_t m = 2;
  while (binomial(m, 2) < v) ++m;
  if (binomial(m, 2) != v || binomial(m, 3) != config.line_count()) return std::nullopt;
  auto rank = parameters(config).constant_rank();
  if (!rank || *rank != m - 2) return std::nullopt;
  return BinomialIndex{m};
}

CollinearityGraph::CollinearityGraph(const Configuration& config)
    : adjacency_(config.point_count()) {
  for (LineIndex li = 0; li < config.line_count(); ++li) {
    const Triple& t = config.line(li);
    for (int x = 0; x < 3; ++x) {
      for (int y = x + 1; y < 3; ++y) {
        edges_.push_back({t[x], t[y], li});
        adjacency_[t[x]].push_back(t[y]);
        adjacency_[t[y]].push_back(t[x]);
      }
    }
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
}

bool CollinearityGraph::adjacent(PointIndex a, PointIndex b) const {
  const auto& row = adjacency_.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

CollinearityGraph collinearity_graph(const Configuration& config) {
  return CollinearityGraph(config);
}

bool is_regular_subconfiguration(const Configuration& ambient, const Configuration& sub) {
  std::vector<PointIndex> to_ambient;
  to_ambient.reserve(sub.point_count());
  std::vector<char> inside(ambient.point_count(), 0);
  for (const std::string& label : sub.labels()) {
    auto p = ambient.find(label);
    if (!p) {
      throw Error(ErrorCode::PointsNotSubset, "point '" + label + "' is not a point of the ambient configuration");
    }
    to_ambient.push_back(*p);
    inside[*p] = 1;
  }
  std::set<LineIndex> extended;
  for (const Triple& t : sub.lines()) {
    auto l = ambient.find_line({to_ambient[t[0]], to_ambient[t[1]], to_ambient[t[2]]});
    if (!l) return false;
    extended.insert(*l);
  }
  if (extended.size() != sub.line_count()) return false;
  for (LineIndex li = 0; li < ambient.line_count(); ++li) {
    const Triple& t = ambient.line(li);
    const int hits = inside[t[0]] + inside[t[1]] + inside[t[2]];
    if (hits >= 2 && !extended.contains(li)) return false;
  }
  return true;
}

Configuration permute_points(const Configuration& config, std::span<const PointIndex> perm) {
  RawConfiguration raw;
  raw.points.assign(config.labels().begin(), config.labels().end());
  for (const Triple& t : config.lines()) {
    raw.lines.push_back({config.label(perm[t[0]]), config.label(perm[t[1]]), config.label(perm[t[2]])});
  }
  return validate_configuration(raw);
}

Configuration induced_configuration(const Configuration& config,
                                    std::span<const PointIndex> points,
                                    std::span<const LineIndex> lines) {
  RawConfiguration raw;
  for (PointIndex p : points) raw.points.push_back(config.label(p));
  for (LineIndex l : lines) {
    const Triple& t = config.line(l);
    raw.lines.push_back({config.label(t[0]), config.label(t[1]), config.label(t[2])});
  }
  return validate_configuration(raw);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> lex_pairs(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(k * (k - (k > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace psts
