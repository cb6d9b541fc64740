#include "psts/constructions.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "psts/error.hpp"

namespace psts {

const std::string& Labelling::at(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return image.at(pair_index(i, j, domain.size()));
}

std::string axis_label(const std::string& z) { return "z:" + z; }

std::string simplex_label(const std::string& x, std::size_t i) {
  return "s:" + x + ":" + std::to_string(i);
}

std::string center_label(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return "q:" + std::to_string(i) + "." + std::to_string(j);
}

Permutation inverse(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) inv.at(perm[a]) = a;
  return inv;
}

Permutation identity_permutation(std::size_t size) {
  Permutation id(size);
  for (std::size_t a = 0; a < size; ++a) id[a] = a;
  return id;
}

void check_permutation(const Permutation& perm, std::size_t size) {
  if (perm.size() != size) {
    throw Error(ErrorCode::SizeMismatch, "permutation has " + std::to_string(perm.size()) +
                                             " entries, expected " + std::to_string(size));
  }
  std::vector<char> seen(size, 0);
  for (std::size_t x : perm) {
    if (x >= size || seen[x]) throw Error(ErrorCode::NotBijective, "entry list is not a permutation");
    seen[x] = 1;
  }
}

void check_labelling(const Labelling& mu, const std::vector<std::string>& vertices,
                     const Configuration& target) {
  if (mu.domain != vertices) {
    throw Error(ErrorCode::SizeMismatch, "labelling domain differs from the vertex set");
  }
  const std::size_t k = vertices.size();
  if (mu.image.size() != binomial(k, 2) || mu.image.size() != target.point_count()) {
    throw Error(ErrorCode::SizeMismatch, "labelling has " + std::to_string(mu.image.size()) +
                                             " values for " + std::to_string(binomial(k, 2)) +
                                             " pairs and " + std::to_string(target.point_count()) +
                                             " target points");
  }
  std::vector<char> hit(target.point_count(), 0);
  for (const std::string& z : mu.image) {
    auto p = target.find(z);
    if (!p) throw Error(ErrorCode::NotBijective, "labelling value '" + z + "' is not a target point");
    if (hit[*p]) throw Error(ErrorCode::NotBijective, "labelling value '" + z + "' is used twice");
    hit[*p] = 1;
  }
}

Configuration grassmannian(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "grassmannian needs n >= 3, got " + std::to_string(n));
  auto name = [](std::size_t i, std::size_t j) { return std::to_string(i) + "." + std::to_string(j); };
  RawConfiguration raw;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) raw.points.push_back(name(i, j));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) raw.lines.push_back({name(i, j), name(i, k), name(j, k)});
  return validate_configuration(raw);
}

Configuration single_point(const std::string& label) {
  RawConfiguration raw;
  raw.points.push_back(label);
  return validate_configuration(raw);
}

Configuration attach_complete(const std::vector<std::string>& vertices, const Labelling& mu,
                              const Configuration& base) {
  auto index = binomial_index(base);
  if (!index) throw Error(ErrorCode::NotBinomial, "base configuration is not binomial");
  if (index->m != vertices.size()) {
    throw Error(ErrorCode::SizeMismatch, "base has index " + std::to_string(index->m) + " but |X| = " +
                                             std::to_string(vertices.size()));
  }
  std::set<std::string> seen;
  for (const std::string& x : vertices) {
    if (base.find(x)) throw Error(ErrorCode::NotDisjoint, "vertex '" + x + "' is already a base point");
    if (!seen.insert(x).second) throw Error(ErrorCode::NotDisjoint, "vertex '" + x + "' listed twice");
  }
  check_labelling(mu, vertices, base);

  RawConfiguration raw = base.to_raw();
  raw.points.insert(raw.points.end(), vertices.begin(), vertices.end());
  for (auto [i, j] : lex_pairs(vertices.size())) {
    raw.lines.push_back({vertices[i], vertices[j], mu.at(i, j)});
  }
  return validate_configuration(raw);
}

Configuration perspective_system(const PerspectiveData& data) {
  const std::size_t m = data.m;
  const std::size_t n = data.n;
  if (m < 1 || n <= m) {
    throw Error(ErrorCode::OutOfRange, "perspective system needs 1 <= m < n, got m=" + std::to_string(m) +
                                           " n=" + std::to_string(n));
  }
  const std::size_t k = n - m + 1;
  auto index = binomial_index(data.axis);
  if (!index || index->m != k) {
    throw Error(ErrorCode::AxisIndexMismatch,
                "axis must have binomial index " + std::to_string(k) + ", has " +
                    (index ? std::to_string(index->m) : std::string("none")));
  }
  const auto& X = data.simplex_vertices;
  if (X.size() != k) {
    throw Error(ErrorCode::SizeMismatch, "|X| = " + std::to_string(X.size()) + ", expected " + std::to_string(k));
  }
  if (std::set<std::string>(X.begin(), X.end()).size() != X.size()) {
    throw Error(ErrorCode::NotDisjoint, "simplex vertices repeat");
  }
  if (data.mu.size() != m) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(m) + " labellings");
  }
  for (const Labelling& mu : data.mu) check_labelling(mu, X, data.axis);
  if (data.xi.size() != m) throw Error(ErrorCode::SizeMismatch, "xi must be an m x m family");
  for (std::size_t i = 0; i < m; ++i) {
    if (data.xi[i].size() != m) throw Error(ErrorCode::SizeMismatch, "xi must be an m x m family");
    for (std::size_t j = 0; j < m; ++j) check_permutation(data.xi[i][j], k);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (data.xi[i][i] != identity_permutation(k)) {
      throw Error(ErrorCode::XiDiagonalNotIdentity, "xi[" + std::to_string(i + 1) + "][" +
                                                        std::to_string(i + 1) + "] is not the identity");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (data.xi[j][i] != inverse(data.xi[i][j])) {
        throw Error(ErrorCode::XiNotInvolutivePair, "xi[" + std::to_string(j + 1) + "][" + std::to_string(i + 1) +
                                                        "] is not the inverse of xi[" + std::to_string(i + 1) +
                                                        "][" + std::to_string(j + 1) + "]");
      }
    }
  }

  RawConfiguration raw;
  for (const std::string& z : data.axis.labels()) raw.points.push_back(axis_label(z));
  for (std::size_t i = 1; i <= m; ++i)
    for (const std::string& x : X) raw.points.push_back(simplex_label(x, i));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) raw.points.push_back(center_label(i, j));

  for (const Triple& t : data.axis.lines()) {
    raw.lines.push_back({axis_label(data.axis.label(t[0])), axis_label(data.axis.label(t[1])),
                         axis_label(data.axis.label(t[2]))});
  }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t l = j + 1; l <= m; ++l)
        raw.lines.push_back({center_label(i, j), center_label(i, l), center_label(j, l)});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t a = 0; a < k; ++a) {
        raw.lines.push_back({center_label(i + 1, j + 1), simplex_label(X[a], i + 1),
                             simplex_label(X[data.xi[i][j][a]], j + 1)});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (auto [a, b] : lex_pairs(k)) {
      raw.lines.push_back({simplex_label(X[a], i + 1), simplex_label(X[b], i + 1), axis_label(data.mu[i].at(a, b))});
    }
  }
  return validate_configuration(raw);
}

namespace {

using Exponents = std::array<std::size_t, 3>;

std::string monomial(const Exponents& e) {
  return "a^" + std::to_string(e[0]) + "b^" + std::to_string(e[1]) + "c^" + std::to_string(e[2]);
}

std::vector<Exponents> multisets(std::size_t k) {
  std::vector<Exponents> out;
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; i + j <= k; ++j) out.push_back({i, j, k - i - j});
  return out;
}

}  // namespace

Configuration veronesian(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::SizeTooSmall, "veronesian needs k >= 2, got " + std::to_string(k));
  RawConfiguration raw;
  for (const Exponents& e : multisets(k)) raw.points.push_back(monomial(e));
  std::set<std::vector<std::string>> seen;
  for (std::size_t r = 1; r <= k; ++r) {
    for (const Exponents& e : multisets(k - r)) {
      std::vector<std::string> line;
      for (std::size_t x = 0; x < 3; ++x) {
        Exponents point = e;
        point[x] += r;
        line.push_back(monomial(point));
      }
      std::sort(line.begin(), line.end());
      if (seen.insert(line).second) raw.lines.push_back(std::move(line));
    }
  }
  return validate_configuration(raw);
}

Configuration two_graph_example(const Configuration& base, const std::vector<std::string>& vertices,
                                const Labelling& mu1, const Labelling& mu2) {
  auto index = binomial_index(base);
  if (!index || index->m != vertices.size()) {
    throw Error(ErrorCode::SizeMismatch, "base must have binomial index |X| = " + std::to_string(vertices.size()));
  }
  if (std::set<std::string>(vertices.begin(), vertices.end()).size() != vertices.size()) {
    throw Error(ErrorCode::SizeMismatch, "vertex set repeats");
  }
  check_labelling(mu1, vertices, base);
  check_labelling(mu2, vertices, base);

  RawConfiguration raw;
  const std::string apex = "p";
  raw.points.push_back(apex);
  for (const std::string& z : base.labels()) raw.points.push_back(axis_label(z));
  for (std::size_t level = 1; level <= 2; ++level)
    for (const std::string& x : vertices) raw.points.push_back(simplex_label(x, level));

  for (const Triple& t : base.lines()) {
    raw.lines.push_back({axis_label(base.label(t[0])), axis_label(base.label(t[1])), axis_label(base.label(t[2]))});
  }
  for (const std::string& x : vertices) raw.lines.push_back({apex, simplex_label(x, 1), simplex_label(x, 2)});
  for (auto [a, b] : lex_pairs(vertices.size())) {
    raw.lines.push_back({simplex_label(vertices[a], 1), simplex_label(vertices[b], 1), axis_label(mu1.at(a, b))});
    raw.lines.push_back({simplex_label(vertices[a], 2), simplex_label(vertices[b], 2), axis_label(mu2.at(a, b))});
  }
  return validate_configuration(raw);
}

}  // namespace psts
