#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "psts/configuration.hpp"
#include "psts/constructions.hpp"

namespace psts {

/// A complete graph freely contained in a configuration: its vertices
/// (ascending) and the side carrying each edge.
struct FreeSubgraph {
  std::vector<PointIndex> vertices;
  /// sides[pair_index(i, j, order())] carries {vertices[i], vertices[j]}.
  std::vector<LineIndex> sides;

  std::size_t order() const noexcept { return vertices.size(); }
  bool contains(PointIndex p) const;
  /// Side through two vertices; kNoLine if either is not a vertex.
  LineIndex side(PointIndex a, PointIndex b) const;

  friend bool operator==(const FreeSubgraph&, const FreeSubgraph&) = default;
  friend auto operator<=>(const FreeSubgraph&, const FreeSubgraph&) = default;
};

/// Witness iff every pair of `points` is collinear, distinct pairs lie on
/// distinct lines, and no two of those lines meet outside `points`.
std::optional<FreeSubgraph> is_freely_contained(const Configuration& config,
                                                std::span<const PointIndex> points);

/// Every free K_size, sorted by vertex list. `threads == 0` picks
/// `search_threads()`.
std::vector<FreeSubgraph> enumerate_free_complete(const Configuration& config, std::size_t size,
                                                  std::size_t threads = 0);

/// n when the configuration has binomial index n + 1, i.e. the order of its
/// maximal complete subgraphs.
std::optional<std::size_t> maximal_subgraph_order(const Configuration& config);

/// Points outside the subgraph and lines other than its sides. Requires
/// binomial index n + 1 and a subgraph of order n.
Configuration complement(const Configuration& config, const FreeSubgraph& subgraph);

/// The labelling e -> third point of side(e), over the subgraph's vertex
/// labels in ascending order. Attaching it to the complement rebuilds `config`.
Labelling side_labelling(const Configuration& config, const FreeSubgraph& subgraph);

struct IntersectionStructure {
  std::vector<FreeSubgraph> subgraphs;
  /// centers[pair_index(i, j, m)]: the common vertex of subgraphs i and j.
  std::vector<PointIndex> centers;
  /// Centers injective and mapping every Grassmannian line onto a line.
  bool embedding_ok = false;

  PointIndex center(std::size_t i, std::size_t j) const;
};

IntersectionStructure intersection_structure(const Configuration& config,
                                             std::span<const FreeSubgraph> subgraphs);

/// Decomposition of a binomial configuration with m maximal complete
/// subgraphs X_1..X_m into private vertices, axis, and private sides.
struct StructureReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<PointIndex>> private_vertices;  // Z_i
  std::vector<PointIndex> axis_points;                    // Z
  std::vector<LineIndex> axis_lines;                      // G
  std::vector<std::vector<LineIndex>> private_sides;      // G_i
  std::vector<PointIndex> centers;                        // Q, by pair index
  Configuration axis;                                     // <Z, G>
};

/// Computes the decomposition and checks all eleven structural facts,
/// throwing StructureViolation naming the failing item.
StructureReport structure_report(const Configuration& config, std::span<const FreeSubgraph> subgraphs);

/// Reads a configuration with 2 <= m <= n - 1 maximal complete subgraphs
/// as a system of perspective simplices over X = {"1", ..., "n-m+1"}.
PerspectiveData decompose(const Configuration& config, std::span<const FreeSubgraph> subgraphs);

}  // namespace psts
