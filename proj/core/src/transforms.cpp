#include "psts/transforms.hpp"

#include <algorithm>
#include <set>

#include "psts/error.hpp"

namespace psts {

namespace {

std::vector<std::vector<PointIndex>> vertex_sets(std::vector<FreeSubgraph> subgraphs) {
  std::vector<std::vector<PointIndex>> sets;
  for (auto& g : subgraphs) sets.push_back(std::move(g.vertices));
  std::sort(sets.begin(), sets.end());
  return sets;
}

bool on_line(const Configuration& config, LineIndex l, PointIndex p) {
  const Triple& t = config.line(l);
  return t[0] == p || t[1] == p || t[2] == p;
}

}  // namespace

std::vector<std::string> extension_labels(const Configuration& config) {
  const auto index = binomial_index(config);
  const std::size_t n = index ? index->m : config.point_count();
  std::string tag = "e" + std::to_string(n + 1);
  auto clashes = [&](const std::string& t) {
    return std::any_of(config.labels().begin(), config.labels().end(),
                       [&](const std::string& l) { return l.rfind(t + "_", 0) == 0; });
  };
  while (clashes(tag)) tag += "'";
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back(tag + "_" + std::to_string(k));
  return labels;
}

Configuration extend_one_more(const Configuration& config, const std::vector<FreeSubgraph>& subgraphs) {
  const auto index = binomial_index(config);
  if (!index) throw Error(ErrorCode::NotBinomial, "extension needs a binomial configuration");
  const std::size_t n = index->m;
  const std::size_t m = subgraphs.size();
  if (n < 3 || m + 2 > n) {
    throw Error(ErrorCode::TooManySubgraphs, std::to_string(m) + " subgraphs in a configuration of index " +
                                                 std::to_string(n) + " (at most n-2 allowed)");
  }
  for (const FreeSubgraph& g : subgraphs) {
    if (g.order() != n - 1) {
      throw Error(ErrorCode::SizeMismatch, "subgraph of order " + std::to_string(g.order()) + ", expected " +
                                               std::to_string(n - 1));
    }
  }
  if (vertex_sets(subgraphs) != vertex_sets(enumerate_free_complete(config, n - 1))) {
    throw Error(ErrorCode::EnumerationNotComplete, "the given subgraphs are not all free K_" + std::to_string(n - 1));
  }

  std::vector<PointIndex> centers;
  if (m >= 2) centers = intersection_structure(config, subgraphs).centers;
  const std::set<PointIndex> center_set(centers.begin(), centers.end());

  std::vector<std::vector<PointIndex>> private_vertices(m);
  std::vector<char> covered(config.point_count(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (PointIndex p : subgraphs[i].vertices) {
      covered[p] = 1;
      if (!center_set.contains(p)) private_vertices[i].push_back(p);
    }
  }
  std::vector<PointIndex> axis;
  for (PointIndex p = 0; p < config.point_count(); ++p)
    if (!covered[p]) axis.push_back(p);

  const std::size_t free_count = n - m;  // |X \ P|
  if (axis.size() < binomial(free_count, 2)) {
    throw Error(ErrorCode::AxisTooSmall, "axis has " + std::to_string(axis.size()) + " points, need " +
                                             std::to_string(binomial(free_count, 2)));
  }

  const std::vector<std::string> fresh = extension_labels(config);
  auto p_label = [&](std::size_t i) { return fresh[i]; };
  auto x_label = [&](std::size_t t) { return fresh[m + t]; };

  RawConfiguration raw = config.to_raw();
  raw.points.insert(raw.points.end(), fresh.begin(), fresh.end());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      raw.lines.push_back({p_label(i), p_label(j), config.label(centers[pair_index(i, j, m)])});
  for (std::size_t i = 0; i < m; ++i) {
    if (private_vertices[i].size() != free_count) {
      throw Error(ErrorCode::EnumerationNotComplete, "subgraph " + std::to_string(i + 1) + " has " +
                                                         std::to_string(private_vertices[i].size()) +
                                                         " private vertices, expected " + std::to_string(free_count));
    }
    for (std::size_t t = 0; t < free_count; ++t)
      raw.lines.push_back({p_label(i), config.label(private_vertices[i][t]), x_label(t)});
  }
  for (auto [a, b] : lex_pairs(free_count))
    raw.lines.push_back({x_label(a), x_label(b), config.label(axis[pair_index(a, b, free_count)])});
  return validate_configuration(raw);
}

std::vector<SwapCertificate> find_swap_candidates(const Configuration& config, const FreeSubgraph& first,
                                                  const FreeSubgraph& second) {
  const auto n = maximal_subgraph_order(config);
  if (!n || *n < 4) throw Error(ErrorCode::OutOfRange, "swap needs a binomial configuration of index >= 5");
  const auto all = enumerate_free_complete(config, *n);
  if (all.size() != 2) {
    throw Error(ErrorCode::NotExactlyTwo, "configuration has " + std::to_string(all.size()) + " free K_" +
                                              std::to_string(*n));
  }
  if (vertex_sets({first, second}) != vertex_sets(all)) {
    throw Error(ErrorCode::NotExactlyTwo, "given subgraphs are not the free K_" + std::to_string(*n) + " pair");
  }

  std::vector<PointIndex> common;
  std::set_intersection(first.vertices.begin(), first.vertices.end(), second.vertices.begin(),
                        second.vertices.end(), std::back_inserter(common));
  if (common.size() != 1) throw Error(ErrorCode::SharedVertexNotUnique, "subgraphs must share one vertex");
  const PointIndex p = common.front();

  auto simplex = [&](const FreeSubgraph& g) {
    std::vector<PointIndex> out;
    for (PointIndex x : g.vertices)
      if (x != p) out.push_back(x);
    return out;
  };
  const auto a1s = simplex(first);
  const auto a2s = simplex(second);

  std::vector<SwapCertificate> out;
  for (std::size_t i = 0; i < a1s.size(); ++i) {
    for (std::size_t j = i + 1; j < a1s.size(); ++j) {
      const PointIndex a1 = a1s[i], b1 = a1s[j];
      const LineIndex side1 = config.line_through(a1, b1);
      const PointIndex q = config.third_point(side1, a1, b1);
      const LineIndex pa1 = config.line_through(p, a1), pb1 = config.line_through(p, b1);
      for (std::size_t s = 0; s < a2s.size(); ++s) {
        for (std::size_t t = s + 1; t < a2s.size(); ++t) {
          const LineIndex side2 = config.line_through(a2s[s], a2s[t]);
          if (config.third_point(side2, a2s[s], a2s[t]) != q) continue;
          for (auto [a2, b2] : {std::pair{a2s[s], a2s[t]}, std::pair{a2s[t], a2s[s]}}) {
            if (on_line(config, pa1, b2) || on_line(config, pb1, a2)) continue;
            out.push_back({config.label(p), config.label(a1), config.label(b1), config.label(a2),
                           config.label(b2), config.label(q)});
          }
        }
      }
    }
  }
  if (out.empty()) throw Error(ErrorCode::NoAdmissiblePair, "no admissible pair of crossing sides");
  std::sort(out.begin(), out.end());
  return out;
}

Configuration swap_kill(const Configuration& config, const SwapCertificate& cert) {
  auto locate = [&](const std::string& label) {
    auto p = config.find(label);
    if (!p) throw Error(ErrorCode::CertificateStale, "point '" + label + "' is not in the configuration");
    return *p;
  };
  const PointIndex p = locate(cert.p), q = locate(cert.q);
  const PointIndex a1 = locate(cert.a1), b1 = locate(cert.b1), a2 = locate(cert.a2), b2 = locate(cert.b2);
  const auto removed1 = config.find_line({q, a1, b1});
  const auto removed2 = config.find_line({q, a2, b2});
  if (!removed1 || !removed2 || *removed1 == *removed2) {
    throw Error(ErrorCode::CertificateStale, "the lines to replace are not in the configuration");
  }
  const LineIndex pa1 = config.line_through(p, a1), pb1 = config.line_through(p, b1);
  if (pa1 == kNoLine || pb1 == kNoLine || on_line(config, pa1, b2) || on_line(config, pb1, a2)) {
    throw Error(ErrorCode::CertificateStale, "certificate violates the orientation condition");
  }

  RawConfiguration raw;
  raw.points.assign(config.labels().begin(), config.labels().end());
  for (LineIndex l = 0; l < config.line_count(); ++l) {
    if (l == *removed1 || l == *removed2) continue;
    const Triple& t = config.line(l);
    raw.lines.push_back({config.label(t[0]), config.label(t[1]), config.label(t[2])});
  }
  raw.lines.push_back({cert.q, cert.a1, cert.b2});
  raw.lines.push_back({cert.q, cert.b1, cert.a2});
  try {
    return validate_configuration(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::AxiomViolation, e.detail());
  }
}

}  // namespace psts
