#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "psts/configuration.hpp"

namespace psts {

/// One-line notation over positions of a declared vertex order:
/// `perm[a]` is the position of the image of vertex `a`.
using Permutation = std::vector<std::size_t>;

/// A bijection from the 2-subsets of `domain` onto the point labels of a
/// target configuration. `image[pair_index(i, j, domain.size())]` is the
/// label assigned to {domain[i], domain[j]}.
struct Labelling {
  std::vector<std::string> domain;
  std::vector<std::string> image;

  const std::string& at(std::size_t i, std::size_t j) const;

  friend bool operator==(const Labelling&, const Labelling&) = default;
};

/// Parameter pack of a system of perspective simplices.
struct PerspectiveData {
  std::size_t m = 0;
  std::size_t n = 0;
  /// The vertex set X of one simplex, |X| = n - m + 1, in declared order.
  std::vector<std::string> simplex_vertices;
  /// Binomial configuration of index n - m + 1 (a single point when m = n - 1).
  Configuration axis;
  /// mu[i] labels C_2(X) onto the axis points, for simplex i + 1.
  std::vector<Labelling> mu;
  /// xi[i][j] for all i, j < m; xi[i][i] = id, xi[j][i] = xi[i][j]^-1.
  std::vector<std::vector<Permutation>> xi;
};

/// Points are "i.j" for 1 <= i < j <= n; one line per 3-subset.
Configuration grassmannian(std::size_t n);

/// A single point and no lines: the degenerate binomial configuration of index 2.
Configuration single_point(const std::string& label = "p");

/// K_X +_mu N: N plus the lines {a, b, mu({a,b})}.
Configuration attach_complete(const std::vector<std::string>& vertices, const Labelling& mu,
                              const Configuration& base);

Configuration perspective_system(const PerspectiveData& data);

/// k-multisets over {a,b,c}, labelled "a^ib^jc^k", with lines e*X^r.
Configuration veronesian(std::size_t k);

/// Two K_n graphs {p} u X x {i} glued over a base of index n - 1.
Configuration two_graph_example(const Configuration& base, const std::vector<std::string>& vertices,
                                const Labelling& mu1, const Labelling& mu2);

// Label conventions used by perspective_system.
std::string axis_label(const std::string& z);
std::string simplex_label(const std::string& x, std::size_t i);
std::string center_label(std::size_t i, std::size_t j);

/// Throws SizeMismatch/NotBijective unless `mu` maps C_2(vertices) onto the
/// points of `target` bijectively.
void check_labelling(const Labelling& mu, const std::vector<std::string>& vertices,
                     const Configuration& target);

/// Throws unless `perm` is a permutation of {0..size-1}.
void check_permutation(const Permutation& perm, std::size_t size);

Permutation inverse(const Permutation& perm);
Permutation identity_permutation(std::size_t size);

}  // namespace psts
