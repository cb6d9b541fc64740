#include "psts/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <thread>

#include "psts/error.hpp"
#include "psts/threads.hpp"

namespace psts {

namespace {

/// Fixed-width bitset sized at runtime; enough for the clique search.
class PointBits {
 public:
  PointBits() = default;
  explicit PointBits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// this & other, keeping only indices strictly above `floor`.
  PointBits meet_above(const PointBits& other, std::size_t floor) const {
    PointBits out;
    out.words_.resize(words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::size_t lo = w * 64;
      if (lo + 63 <= floor) {
        out.words_[w] = 0;
      } else if (lo <= floor) {
        const std::size_t keep_from = floor - lo + 1;
        out.words_[w] &= keep_from >= 64 ? 0 : (~std::uint64_t{0} << keep_from);
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int t = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(t));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

FreeSubgraph make_subgraph(const Configuration& config, std::vector<PointIndex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  FreeSubgraph g;
  g.sides.reserve(binomial(vertices.size(), 2));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      g.sides.push_back(config.line_through(vertices[i], vertices[j]));
  g.vertices = std::move(vertices);
  return g;
}

class CliqueSearch {
 public:
  CliqueSearch(const Configuration& config, std::size_t size) : config_(config), size_(size) {
    const std::size_t v = config.point_count();
    neighbours_.assign(v, PointBits(v));
    for (PointIndex p = 0; p < v; ++p)
      for (LineIndex l : config.lines_through(p))
        for (PointIndex q : config.line(l))
          if (q != p) neighbours_[p].set(q);
  }

  /// All free cliques whose smallest vertex is `first`.
  void search_from(PointIndex first, std::vector<FreeSubgraph>& out) const {
    const std::size_t v = config_.point_count();
    std::vector<PointIndex> clique{first};
    PointBits thirds(v);
    PointBits all(v);
    for (std::size_t p = 0; p < v; ++p) all.set(p);
    extend(clique, thirds, all.meet_above(neighbours_[first], first), out);
  }

 private:
  void extend(std::vector<PointIndex>& clique, const PointBits& thirds, const PointBits& candidates,
              std::vector<FreeSubgraph>& out) const {
    if (clique.size() == size_) {
      out.push_back(make_subgraph(config_, clique));
      return;
    }
    if (clique.size() + candidates.count() < size_) return;

    std::vector<PointIndex> fresh;
    candidates.for_each([&](std::size_t w) {
      fresh.clear();
      for (PointIndex c : clique) {
        const PointIndex t = config_.third_point(config_.line_through(c, static_cast<PointIndex>(w)), c,
                                                 static_cast<PointIndex>(w));
        if (thirds.test(t) || std::find(clique.begin(), clique.end(), t) != clique.end() ||
            std::find(fresh.begin(), fresh.end(), t) != fresh.end()) {
          return;
        }
        fresh.push_back(t);
      }
      PointBits next_thirds = thirds;
      PointBits next = candidates.meet_above(neighbours_[w], w);
      for (PointIndex t : fresh) {
        next_thirds.set(t);
        next.reset(t);
      }
      clique.push_back(static_cast<PointIndex>(w));
      extend(clique, next_thirds, next, out);
      clique.pop_back();
    });
  }

  const Configuration& config_;
  std::size_t size_;
  std::vector<PointBits> neighbours_;
};

}  // namespace

bool FreeSubgraph::contains(PointIndex p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

LineIndex FreeSubgraph::side(PointIndex a, PointIndex b) const {
  auto ia = std::lower_bound(vertices.begin(), vertices.end(), a);
  auto ib = std::lower_bound(vertices.begin(), vertices.end(), b);
  if (ia == vertices.end() || *ia != a || ib == vertices.end() || *ib != b || a == b) return kNoLine;
  std::size_t i = static_cast<std::size_t>(ia - vertices.begin());
  std::size_t j = static_cast<std::size_t>(ib - vertices.begin());
  if (i > j) std::swap(i, j);
  return sides[pair_index(i, j, vertices.size())];
}

std::optional<FreeSubgraph> is_freely_contained(const Configuration& config,
                                                std::span<const PointIndex> points) {
  std::vector<PointIndex> vertices(points.begin(), points.end());
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) return std::nullopt;
  for (PointIndex p : vertices) {
    if (p >= config.point_count()) return std::nullopt;
  }
  // Free containment holds iff every pair is collinear and the third points
  // of all sides are pairwise distinct and lie outside the vertex set.
  std::vector<char> used(config.point_count(), 0);
  for (PointIndex p : vertices) used[p] = 1;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const LineIndex l = config.line_through(vertices[i], vertices[j]);
      if (l == kNoLine) return std::nullopt;
      const PointIndex t = config.third_point(l, vertices[i], vertices[j]);
      if (used[t]) return std::nullopt;
      used[t] = 1;
    }
  }
  return make_subgraph(config, std::move(vertices));
}

std::vector<FreeSubgraph> enumerate_free_complete(const Configuration& config, std::size_t size,
                                                  std::size_t threads) {
  std::vector<FreeSubgraph> result;
  const std::size_t v = config.point_count();
  if (size == 0 || size > v) return result;
  CliqueSearch search(config, size);

  if (threads == 0) threads = search_threads();
  // Small searches finish faster than a thread can start.
  if (v < 24) threads = 1;
  threads = std::min(threads, v);

  if (threads <= 1) {
    for (PointIndex first = 0; first < v; ++first) search.search_from(first, result);
  } else {
    std::vector<std::vector<FreeSubgraph>> partial(threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t first = next++; first < v; first = next++)
          search.search_from(static_cast<PointIndex>(first), partial[t]);
      });
    }
    workers.clear();
    for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(result));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<std::size_t> maximal_subgraph_order(const Configuration& config) {
  auto index = binomial_index(config);
  if (!index || index->m < 2) return std::nullopt;
  return index->m - 1;
}

Configuration complement(const Configuration& config, const FreeSubgraph& subgraph) {
  auto n = maximal_subgraph_order(config);
  if (!n) throw Error(ErrorCode::SizeMismatch, "complement needs a binomial configuration");
  if (subgraph.order() != *n) {
    throw Error(ErrorCode::SizeMismatch, "subgraph has order " + std::to_string(subgraph.order()) +
                                             ", expected " + std::to_string(*n));
  }
  std::vector<PointIndex> points;
  for (PointIndex p = 0; p < config.point_count(); ++p)
    if (!subgraph.contains(p)) points.push_back(p);
  const std::set<LineIndex> sides(subgraph.sides.begin(), subgraph.sides.end());
  std::vector<LineIndex> lines;
  for (LineIndex l = 0; l < config.line_count(); ++l)
    if (!sides.contains(l)) lines.push_back(l);
  return induced_configuration(config, points, lines);
}

Labelling side_labelling(const Configuration& config, const FreeSubgraph& subgraph) {
  Labelling mu;
  for (PointIndex p : subgraph.vertices) mu.domain.push_back(config.label(p));
  const std::size_t k = subgraph.order();
  for (auto [i, j] : lex_pairs(k)) {
    const PointIndex a = subgraph.vertices[i], b = subgraph.vertices[j];
    mu.image.push_back(config.label(config.third_point(subgraph.sides[pair_index(i, j, k)], a, b)));
  }
  return mu;
}

PointIndex IntersectionStructure::center(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return centers.at(pair_index(i, j, subgraphs.size()));
}

IntersectionStructure intersection_structure(const Configuration& config,
                                             std::span<const FreeSubgraph> subgraphs) {
  IntersectionStructure result;
  result.subgraphs.assign(subgraphs.begin(), subgraphs.end());
  const std::size_t m = subgraphs.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (subgraphs[i].vertices == subgraphs[j].vertices) {
        throw Error(ErrorCode::NotDistinct, "subgraphs " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) + " coincide");
      }
      std::vector<PointIndex> common;
      std::set_intersection(subgraphs[i].vertices.begin(), subgraphs[i].vertices.end(),
                            subgraphs[j].vertices.begin(), subgraphs[j].vertices.end(),
                            std::back_inserter(common));
      if (common.size() != 1) {
        throw Error(ErrorCode::SharedVertexNotUnique,
                    "subgraphs " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share " +
                        std::to_string(common.size()) + " vertices");
      }
      result.centers.push_back(common.front());
    }
  }
  bool ok = std::set<PointIndex>(result.centers.begin(), result.centers.end()).size() == result.centers.size();
  for (std::size_t i = 0; ok && i < m; ++i)
    for (std::size_t j = i + 1; ok && j < m; ++j)
      for (std::size_t k = j + 1; ok && k < m; ++k)
        ok = config.find_line({result.center(i, j), result.center(i, k), result.center(j, k)}).has_value();
  result.embedding_ok = ok;
  return result;
}

namespace {

[[noreturn]] void violation(int item, const std::string& what) {
  throw Error(ErrorCode::StructureViolation, "item " + std::to_string(item) + ": " + what);
}

}  // namespace

StructureReport structure_report(const Configuration& config, std::span<const FreeSubgraph> subgraphs) {
  auto n_opt = maximal_subgraph_order(config);
  if (!n_opt) throw Error(ErrorCode::NotBinomial, "structure report needs a binomial configuration");
  const std::size_t n = *n_opt;
  const std::size_t m = subgraphs.size();
  if (m == 0) throw Error(ErrorCode::SizeMismatch, "structure report needs at least one subgraph");
  for (const FreeSubgraph& g : subgraphs) {
    if (g.order() != n) {
      throw Error(ErrorCode::SizeMismatch, "subgraph of order " + std::to_string(g.order()) +
                                               " in a configuration of index " + std::to_string(n + 1));
    }
  }
  const IntersectionStructure inter = intersection_structure(config, subgraphs);
  if (!inter.embedding_ok) violation(0, "common vertices do not embed the Grassmannian of the index set");

  StructureReport r;
  r.n = n;
  r.m = m;
  r.centers = inter.centers;
  const std::size_t v = config.point_count();

  std::vector<int> membership(v, 0);
  for (const FreeSubgraph& g : subgraphs)
    for (PointIndex p : g.vertices) ++membership[p];
  for (PointIndex p = 0; p < v; ++p)
    if (membership[p] == 0) r.axis_points.push_back(p);
  r.private_vertices.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    for (PointIndex p : subgraphs[i].vertices)
      if (membership[p] == 1) r.private_vertices[i].push_back(p);

  std::vector<int> side_owners(config.line_count(), 0);
  std::vector<std::set<LineIndex>> sides(m);
  for (std::size_t i = 0; i < m; ++i) {
    sides[i] = std::set<LineIndex>(subgraphs[i].sides.begin(), subgraphs[i].sides.end());
    for (LineIndex l : sides[i]) ++side_owners[l];
  }
  for (LineIndex l = 0; l < config.line_count(); ++l)
    if (side_owners[l] == 0) r.axis_lines.push_back(l);
  r.private_sides.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    for (LineIndex l : sides[i])
      if (side_owners[l] == 1) r.private_sides[i].push_back(l);

  std::vector<char> in_axis(v, 0);
  for (PointIndex p : r.axis_points) in_axis[p] = 1;
  auto axis_hits = [&](const Triple& t) { return in_axis[t[0]] + in_axis[t[1]] + in_axis[t[2]]; };
  const std::set<LineIndex> axis_line_set(r.axis_lines.begin(), r.axis_lines.end());

  // 1
  for (LineIndex l : r.axis_lines)
    if (axis_hits(config.line(l)) != 3) violation(1, "an axis line leaves the axis");
  // 2
  for (LineIndex l = 0; l < config.line_count(); ++l)
    if (axis_hits(config.line(l)) >= 2 && !axis_line_set.contains(l))
      violation(2, "a line meeting the axis twice is a side");
  // 3
  const long long k = static_cast<long long>(n) + 1 - static_cast<long long>(m);
  for (std::size_t i = 0; i < m; ++i)
    if (static_cast<long long>(r.private_vertices[i].size()) != k)
      violation(3, "|Z_" + std::to_string(i + 1) + "| = " + std::to_string(r.private_vertices[i].size()) +
                       ", expected " + std::to_string(k));
  const std::size_t ku = static_cast<std::size_t>(k);
  // 4
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const PointIndex q = inter.center(i, j);
      std::vector<PointIndex> a = r.private_vertices[i], b = r.private_vertices[j];
      a.push_back(q);
      b.push_back(q);
      if (!is_freely_contained(config, a) || !is_freely_contained(config, b))
        violation(4, "Z_i + q is not freely contained");
      std::set<LineIndex> through_a, through_b;
      for (PointIndex x : r.private_vertices[i]) through_a.insert(config.line_through(q, x));
      for (PointIndex x : r.private_vertices[j]) through_b.insert(config.line_through(q, x));
      if (through_a != through_b) violation(4, "sides through a center differ");
    }
  }
  // 5, 6
  if (r.axis_points.size() != binomial(ku, 2)) violation(5, "|Z| = " + std::to_string(r.axis_points.size()));
  if (r.axis_lines.size() != binomial(ku, 3)) violation(6, "|G| = " + std::to_string(r.axis_lines.size()));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& zi = r.private_vertices[i];
    auto in_zi = [&](PointIndex p) { return std::find(zi.begin(), zi.end(), p) != zi.end(); };
    // 7
    for (LineIndex l : r.private_sides[i]) {
      const Triple& t = config.line(l);
      int on_x = 0, on_z = 0;
      bool inside_zi = true;
      for (PointIndex p : t) {
        if (subgraphs[i].contains(p)) {
          ++on_x;
          inside_zi = inside_zi && in_zi(p);
        }
        on_z += in_axis[p];
      }
      if (on_x != 2 || !inside_zi || on_z != 1) violation(7, "private side has the wrong shape");
    }
    // 8
    const std::set<LineIndex> private_set(r.private_sides[i].begin(), r.private_sides[i].end());
    for (std::size_t a = 0; a < zi.size(); ++a)
      for (std::size_t b = a + 1; b < zi.size(); ++b)
        if (!private_set.contains(config.line_through(zi[a], zi[b])))
          violation(8, "side of two private vertices is shared");
    // 9
    if (r.private_sides[i].size() != binomial(ku, 2)) violation(9, "|G_i| = " + std::to_string(r.private_sides[i].size()));
    // 10
    for (PointIndex p : r.axis_points) {
      std::size_t through = 0;
      for (LineIndex l : r.private_sides[i]) {
        const Triple& t = config.line(l);
        through += (t[0] == p || t[1] == p || t[2] == p) ? 1 : 0;
      }
      if (through != 1) violation(10, "axis point on " + std::to_string(through) + " private sides");
    }
  }
  // 11
  r.axis = induced_configuration(config, r.axis_points, r.axis_lines);
  if (ku >= 2) {
    auto index = binomial_index(r.axis);
    if (!index || index->m != ku) violation(11, "axis is not binomial of index " + std::to_string(ku));
  } else if (!r.axis_points.empty() || !r.axis_lines.empty()) {
    violation(11, "degenerate axis is not empty");
  }
  if (!is_regular_subconfiguration(config, r.axis)) violation(11, "axis is not regularly contained");
  return r;
}

PerspectiveData decompose(const Configuration& config, std::span<const FreeSubgraph> subgraphs) {
  auto n_opt = maximal_subgraph_order(config);
  if (!n_opt) throw Error(ErrorCode::NotBinomial, "decompose needs a binomial configuration");
  const std::size_t n = *n_opt;
  const std::size_t m = subgraphs.size();
  if (m < 2 || m + 1 > n) {
    throw Error(ErrorCode::OutOfRange, "decompose needs 2 <= m <= n-1, got m=" + std::to_string(m) +
                                           " n=" + std::to_string(n));
  }
  const StructureReport report = structure_report(config, subgraphs);
  const std::size_t k = n - m + 1;

  PerspectiveData data;
  data.m = m;
  data.n = n;
  for (std::size_t a = 1; a <= k; ++a) data.simplex_vertices.push_back(std::to_string(a));
  data.axis = report.axis;

  for (std::size_t i = 0; i < m; ++i) {
    const auto& zi = report.private_vertices[i];
    Labelling mu;
    mu.domain = data.simplex_vertices;
    for (auto [a, b] : lex_pairs(k)) {
      const LineIndex l = config.line_through(zi[a], zi[b]);
      mu.image.push_back(config.label(config.third_point(l, zi[a], zi[b])));
    }
    data.mu.push_back(std::move(mu));
  }

  data.xi.assign(m, std::vector<Permutation>(m));
  for (std::size_t i = 0; i < m; ++i) {
    data.xi[i][i] = identity_permutation(k);
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const PointIndex q = report.centers[pair_index(std::min(i, j), std::max(i, j), m)];
      const auto& zi = report.private_vertices[i];
      const auto& zj = report.private_vertices[j];
      Permutation perm(k);
      for (std::size_t a = 0; a < k; ++a) {
        const PointIndex image = config.third_point(config.line_through(q, zi[a]), q, zi[a]);
        auto it = std::find(zj.begin(), zj.end(), image);
        if (it == zj.end()) violation(4, "perspectivity through a center leaves the private vertices");
        perm[a] = static_cast<std::size_t>(it - zj.begin());
      }
      data.xi[i][j] = std::move(perm);
    }
  }
  return data;
}

}  // namespace psts
