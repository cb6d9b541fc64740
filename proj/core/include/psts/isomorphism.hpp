#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psts/configuration.hpp"

namespace psts {

/// Relabelling-invariant certificate of a configuration.
///
/// `certificate` is the sorted list of sorted triples obtained by relabelling
/// points with `witness` (point p becomes witness[p]). Two configurations are
/// isomorphic exactly when their certificates are equal.
struct CanonicalForm {
  std::size_t point_count = 0;
  std::vector<Triple> certificate;
  std::vector<PointIndex> witness;

  /// 16 hex digits of FNV-1a over (v, triples).
  std::string digest() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.point_count == b.point_count && a.certificate == b.certificate;
  }
};

CanonicalForm canonical_form(const Configuration& config);

/// Point map A -> B carrying lines onto lines, or nothing.
std::optional<std::vector<PointIndex>> find_isomorphism(const Configuration& a, const Configuration& b);

inline bool are_isomorphic(const Configuration& a, const Configuration& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace psts
