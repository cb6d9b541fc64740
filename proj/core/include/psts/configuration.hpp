#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psts {

using PointIndex = std::uint32_t;
using LineIndex = std::uint32_t;
inline constexpr LineIndex kNoLine = std::numeric_limits<LineIndex>::max();

/// Three dense point indices in ascending order.
using Triple = std::array<PointIndex, 3>;

/// Unvalidated point/line lists as they come from a file or a construction.
struct RawConfiguration {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> lines;
};

/// A finite partial Steiner triple system.
///
/// Points carry opaque labels externally. Internally point `i` is the `i`-th
/// label in ascending byte order, so index order and label order agree and
/// the line list (sorted triples, sorted lexicographically) is canonical for
/// a given labelled structure. Instances only come out of
/// `validate_configuration` and are immutable afterwards.
class Configuration {
 public:
  Configuration() = default;

  std::size_t point_count() const noexcept { return labels_.size(); }
  std::size_t line_count() const noexcept { return lines_.size(); }

  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(PointIndex p) const { return labels_.at(p); }
  std::optional<PointIndex> find(std::string_view label) const;
  /// Throws `UnknownPoint` when the label is absent.
  PointIndex index_of(std::string_view label) const;

  std::span<const Triple> lines() const noexcept { return lines_; }
  const Triple& line(LineIndex l) const { return lines_.at(l); }
  std::span<const LineIndex> lines_through(PointIndex p) const { return incidence_.at(p); }
  std::size_t rank(PointIndex p) const { return incidence_.at(p).size(); }

  /// The unique line through two distinct points, or `kNoLine`.
  LineIndex line_through(PointIndex a, PointIndex b) const noexcept {
    return pair_line_[static_cast<std::size_t>(a) * labels_.size() + b];
  }
  bool collinear(PointIndex a, PointIndex b) const noexcept {
    return a != b && line_through(a, b) != kNoLine;
  }
  /// The point of `l` other than `a` and `b` (both must lie on `l`).
  PointIndex third_point(LineIndex l, PointIndex a, PointIndex b) const;
  std::optional<LineIndex> find_line(Triple t) const;
  bool contains_line(std::string_view a, std::string_view b, std::string_view c) const;

  RawConfiguration to_raw() const;

  friend bool operator==(const Configuration& x, const Configuration& y) {
    return x.labels_ == y.labels_ && x.lines_ == y.lines_;
  }

 private:
  friend Configuration validate_configuration(const RawConfiguration& raw);

  std::vector<std::string> labels_;
  std::vector<Triple> lines_;
  std::vector<std::vector<LineIndex>> incidence_;
  std::vector<LineIndex> pair_line_;
};

struct ConfigParams {
  std::size_t v = 0;
  std::size_t b = 0;
  /// rank -> number of points with that rank
  std::map<std::size_t, std::size_t> rank_profile;
  std::size_t line_size = 3;

  /// The common rank when every point has the same one.
  std::optional<std::size_t> constant_rank() const;

  friend bool operator==(const ConfigParams&, const ConfigParams&) = default;
};

/// `m` with v = C(m,2), b = C(m,3) and every point of rank m-2.
struct BinomialIndex {
  std::size_t m = 0;
  friend bool operator==(const BinomialIndex&, const BinomialIndex&) = default;
};

/// Simple graph on the points; every edge remembers the line it lies on.
class CollinearityGraph {
 public:
  struct Edge {
    PointIndex a;
    PointIndex b;
    LineIndex line;
  };

  explicit CollinearityGraph(const Configuration& config);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const PointIndex> neighbours(PointIndex p) const { return adjacency_.at(p); }
  bool adjacent(PointIndex a, PointIndex b) const;

 private:
  std::vector<std::vector<PointIndex>> adjacency_;
  std::vector<Edge> edges_;
};

Configuration validate_configuration(const RawConfiguration& raw);
ConfigParams parameters(const Configuration& config);
std::optional<BinomialIndex> binomial_index(const Configuration& config);
CollinearityGraph collinearity_graph(const Configuration& config);

/// True iff every line of `sub` is a line of `ambient`, and every line of
/// `ambient` meeting the points of `sub` twice is a line of `sub`. Points
/// are matched by label; throws `PointsNotSubset` otherwise.
bool is_regular_subconfiguration(const Configuration& ambient, const Configuration& sub);

/// Moves the role of point `p` to point `perm[p]`, keeping the label set.
Configuration permute_points(const Configuration& config, std::span<const PointIndex> perm);

/// Sub-structure on `points` with exactly the given lines (all referring to
/// those points). Labels are kept.
Configuration induced_configuration(const Configuration& config,
                                    std::span<const PointIndex> points,
                                    std::span<const LineIndex> lines);

// Small counting helpers shared by the constructions and their checks.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Position of the pair {i,j} (i < j < k) in the lexicographic listing of C_2({0..k-1}).
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k) noexcept {
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

/// All pairs (i,j), i < j < k, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> lex_pairs(std::size_t k);

}  // namespace psts
