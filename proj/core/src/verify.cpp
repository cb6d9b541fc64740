#include "psts/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "psts/error.hpp"
#include "psts/io.hpp"
#include "psts/reference.hpp"
#include "psts/transforms.hpp"

namespace psts {

namespace {

using LabelSets = std::vector<std::vector<std::string>>;

std::vector<std::string> labels_of(const Configuration& config, std::span<const PointIndex> points) {
  std::vector<std::string> out;
  for (PointIndex p : points) out.push_back(config.label(p));
  std::sort(out.begin(), out.end());
  return out;
}

LabelSets label_sets(const Configuration& config, const std::vector<FreeSubgraph>& subgraphs) {
  LabelSets out;
  for (const FreeSubgraph& g : subgraphs) out.push_back(labels_of(config, g.vertices));
  std::sort(out.begin(), out.end());
  return out;
}

LabelSets sorted_sets(LabelSets sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::size_t count_free(const Configuration& config, std::size_t order) {
  return enumerate_free_complete(config, order).size();
}

/// Label sets of the complete graphs extend_one_more must produce.
LabelSets extension_targets(const Configuration& config, std::size_t order) {
  const auto subs = enumerate_free_complete(config, order);
  const auto fresh = extension_labels(config);
  LabelSets out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto s = labels_of(config, subs[i].vertices);
    s.push_back(fresh[i]);
    out.push_back(std::move(s));
  }
  out.push_back(fresh);
  return sorted_sets(std::move(out));
}

std::string swap_provenance(const std::string& parent, const SwapCertificate& cert) {
  std::string c = emit_swap_certificate(cert);
  c.pop_back();
  return "swap(" + parent + ", " + c + ")";
}

std::vector<FreeSubgraph> subgraphs_of(const CorpusEntry& e) {
  return enumerate_free_complete(e.configuration, e.order());
}

}  // namespace

std::string_view origin_name(Origin origin) noexcept {
  switch (origin) {
    case Origin::Grassmannian: return "grassmannian";
    case Origin::Veronesian: return "veronesian";
    case Origin::Perspective: return "perspective";
    case Origin::Attach: return "attach";
    case Origin::TwoGraph: return "two-graph";
    case Origin::Census: return "census";
    case Origin::Extend: return "extend";
    case Origin::Swap: return "swap";
  }
  return "unknown";
}

CorpusEntry make_entry(std::string provenance, Origin origin, std::function<Configuration()> replay) {
  CorpusEntry e;
  e.provenance = std::move(provenance);
  e.origin = origin;
  e.configuration = replay();
  e.replay = std::move(replay);
  const auto index = binomial_index(e.configuration);
  if (!index || index->m < 4) {
    throw Error(ErrorCode::PropertyFailure, "corpus entry '" + e.provenance + "' is not binomial of index >= 4");
  }
  e.index = index->m;
  e.subgraph_count = count_free(e.configuration, e.order());
  return e;
}

Labelling random_labelling(const std::vector<std::string>& vertices, const Configuration& target,
                           std::mt19937_64& rng) {
  Labelling mu;
  mu.domain = vertices;
  mu.image.assign(target.labels().begin(), target.labels().end());
  std::shuffle(mu.image.begin(), mu.image.end(), rng);
  return mu;
}

PerspectiveData random_perspective_data(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  if (m < 1 || n <= m) throw Error(ErrorCode::OutOfRange, "need 1 <= m < n");
  const std::size_t k = n - m + 1;
  PerspectiveData data;
  data.m = m;
  data.n = n;
  data.simplex_vertices = numbered("x", k);
  data.axis = k >= 3 ? grassmannian(k) : single_point();
  for (std::size_t i = 0; i < m; ++i) data.mu.push_back(random_labelling(data.simplex_vertices, data.axis, rng));
  data.xi.assign(m, std::vector<Permutation>(m));
  for (std::size_t i = 0; i < m; ++i) {
    data.xi[i][i] = identity_permutation(k);
    for (std::size_t j = i + 1; j < m; ++j) {
      Permutation perm = identity_permutation(k);
      std::shuffle(perm.begin(), perm.end(), rng);
      data.xi[i][j] = perm;
      data.xi[j][i] = inverse(perm);
    }
  }
  return data;
}

std::vector<std::string> census_vertices() { return numbered("x", 4); }

CensusReport classify_veblen_labellings() {
  const Configuration veblen = grassmannian(4);
  const auto X = census_vertices();
  const Configuration desargues = grassmannian(5);
  const Configuration kantor = veronesian(3);

  Labelling mu;
  mu.domain = X;
  mu.image.assign(veblen.labels().begin(), veblen.labels().end());

  CensusReport report;
  std::map<std::vector<Triple>, std::size_t> seen;
  do {
    Configuration config = attach_complete(X, mu, veblen);
    CanonicalForm form = canonical_form(config);
    auto [it, fresh] = seen.emplace(form.certificate, report.classes.size());
    if (fresh) {
      CensusClass c;
      c.free_k4 = count_free(config, 4);
      c.form = std::move(form);
      c.representative = mu;
      c.configuration = std::move(config);
      report.classes.push_back(std::move(c));
    }
    ++report.classes[it->second].labellings;
  } while (std::next_permutation(mu.image.begin(), mu.image.end()));

  std::sort(report.classes.begin(), report.classes.end(), [](const CensusClass& a, const CensusClass& b) {
    return std::tie(a.free_k4, a.form.certificate) < std::tie(b.free_k4, b.form.certificate);
  });
  for (CensusClass& c : report.classes) {
    c.is_grassmannian = c.free_k4 == 5 && are_isomorphic(c.configuration, desargues);
    c.is_veronesian = c.free_k4 == 3 && are_isomorphic(c.configuration, kantor);
    report.counts.insert(c.free_k4);
  }

  if (report.counts != std::set<std::size_t>{1, 2, 3, 5}) {
    std::vector<std::string> got;
    for (auto c : report.counts) got.push_back(std::to_string(c));
    throw Error(ErrorCode::PropertyFailure, "census counts are {" + join(got, ",") + "}, expected {1,2,3,5}");
  }
  for (const CensusClass& c : report.classes) {
    if (c.free_k4 == 5 && !c.is_grassmannian) {
      throw Error(ErrorCode::PropertyFailure, "a census class with five free K_4 is not the Desargues configuration");
    }
  }
  return report;
}

std::vector<CorpusEntry> build_corpus(std::size_t n_max, std::uint64_t seed) {
  if (n_max < 4 || n_max > 7) throw Error(ErrorCode::OutOfRange, "n_max must lie in [4, 7]");
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> corpus;
  const std::string seed_tag = " seed=" + std::to_string(seed);

  for (std::size_t k = 4; k <= n_max + 1; ++k) {
    CorpusEntry e = make_entry("grassmannian " + std::to_string(k), Origin::Grassmannian,
                               [k] { return grassmannian(k); });
    for (std::size_t i = 1; i <= k; ++i) {
      std::vector<std::string> star;
      for (std::size_t j = 1; j <= k; ++j) {
        if (j != i) star.push_back(std::to_string(std::min(i, j)) + "." + std::to_string(std::max(i, j)));
      }
      e.designated.push_back(std::move(star));
    }
    corpus.push_back(std::move(e));
  }

  for (std::size_t k = 2; k + 2 <= n_max + 1; ++k) {
    CorpusEntry e = make_entry("veronesian " + std::to_string(k), Origin::Veronesian, [k] { return veronesian(k); });
    for (std::size_t skip = 0; skip < 3; ++skip) {
      std::vector<std::string> face;
      for (const std::string& label : e.configuration.labels()) {
        const std::string zero = std::string(1, static_cast<char>('a' + skip)) + "^0";
        if (label.find(zero) != std::string::npos) face.push_back(label);
      }
      e.designated.push_back(std::move(face));
    }
    corpus.push_back(std::move(e));
  }

  for (std::size_t n = 3; n <= n_max; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      for (int draw = 0; draw < 2; ++draw) {
        PerspectiveData data = random_perspective_data(n, m, rng);
        CorpusEntry e = make_entry("perspective n=" + std::to_string(n) + " m=" + std::to_string(m) + seed_tag +
                                       " draw=" + std::to_string(draw),
                                   Origin::Perspective, [data] { return perspective_system(data); });
        for (std::size_t i = 1; i <= m; ++i) {
          std::vector<std::string> xi;
          for (const std::string& x : data.simplex_vertices) xi.push_back(simplex_label(x, i));
          for (std::size_t j = 1; j <= m; ++j)
            if (j != i) xi.push_back(center_label(i, j));
          e.designated.push_back(std::move(xi));
        }
        corpus.push_back(std::move(e));
      }
    }
  }

  for (std::size_t n = 4; n <= n_max; ++n) {
    for (int draw = 0; draw < 2; ++draw) {
      const auto X = numbered("x", n);
      Configuration base = grassmannian(n);
      Labelling mu = random_labelling(X, base, rng);
      CorpusEntry e = make_entry("attach grassmannian " + std::to_string(n) + seed_tag + " draw=" + std::to_string(draw),
                                 Origin::Attach, [X, mu, base] { return attach_complete(X, mu, base); });
      e.designated.push_back(X);
      corpus.push_back(std::move(e));
    }
  }

  for (std::size_t n = 4; n <= n_max; ++n) {
    const auto X = numbered("x", n - 1);
    Configuration base = grassmannian(n - 1);
    Labelling mu1 = random_labelling(X, base, rng);
    Labelling mu2 = random_labelling(X, base, rng);
    CorpusEntry e = make_entry("two-graph grassmannian " + std::to_string(n - 1) + seed_tag, Origin::TwoGraph,
                               [X, base, mu1, mu2] { return two_graph_example(base, X, mu1, mu2); });
    for (std::size_t level = 1; level <= 2; ++level) {
      std::vector<std::string> g{"p"};
      for (const std::string& x : X) g.push_back(simplex_label(x, level));
      e.designated.push_back(std::move(g));
    }
    corpus.push_back(std::move(e));
  }

  {
    const CensusReport census = classify_veblen_labellings();
    const auto X = census_vertices();
    for (const CensusClass& c : census.classes) {
      const Labelling mu = c.representative;
      CorpusEntry e = make_entry("census class free_k4=" + std::to_string(c.free_k4) + " mu=" + join(mu.image, ","),
                                 Origin::Census, [X, mu] { return attach_complete(X, mu, grassmannian(4)); });
      e.designated.push_back(X);
      corpus.push_back(std::move(e));
    }
  }

  // One extension per (origin, index, count) among the inputs that allow it.
  std::set<std::tuple<Origin, std::size_t, std::size_t>> extended;
  const std::size_t base_size = corpus.size();
  for (std::size_t i = 0; i < base_size; ++i) {
    const CorpusEntry& in = corpus[i];
    if (in.index > n_max || in.subgraph_count + 2 > in.index) continue;
    if (!extended.insert({in.origin, in.index, in.subgraph_count}).second) continue;
    const Configuration source = in.configuration;
    const std::size_t order = in.order();
    CorpusEntry e = make_entry("extend(" + in.provenance + ")", Origin::Extend, [source, order] {
      return extend_one_more(source, enumerate_free_complete(source, order));
    });
    e.designated = extension_targets(source, order);
    e.parent = i;
    corpus.push_back(std::move(e));
  }

  // Swaps on every distinct (origin, index) with exactly two subgraphs.
  std::set<std::pair<Origin, std::size_t>> swapped;
  const std::size_t grown_size = corpus.size();
  for (std::size_t i = 0; i < grown_size; ++i) {
    const CorpusEntry& in = corpus[i];
    if (in.subgraph_count != 2 || in.order() < 4) continue;
    if (!swapped.insert({in.origin, in.index}).second) continue;
    const Configuration source = in.configuration;
    const auto subs = subgraphs_of(in);
    std::vector<SwapCertificate> certs;
    try {
      certs = find_swap_candidates(source, subs[0], subs[1]);
    } catch (const Error&) {
      continue;  // reported by the battery
    }
    const SwapCertificate cert = certs.front();
    CorpusEntry e = make_entry(swap_provenance(in.provenance, cert), Origin::Swap, [source, cert] { return swap_kill(source, cert); });
    e.parent = i;
    corpus.push_back(std::move(e));
  }
  return corpus;
}

bool BatteryReport::passed() const noexcept {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const PropertyResult* BatteryReport::find(std::string_view property) const {
  for (const PropertyResult& p : properties)
    if (p.property == property) return &p;
  return nullptr;
}

void require_passed(const BatteryReport& report) {
  for (const PropertyResult& p : report.properties) {
    if (!p.passed()) {
      throw Error(ErrorCode::PropertyFailure,
                  p.property + ": " + (p.failure_details.empty() ? std::string("failed") : p.failure_details.front()));
    }
  }
}

namespace {

class Tally {
 public:
  /// Runs `check` for one entry; a throw counts as a failure.
  template <typename F>
  void run(const std::string& property, const std::string& provenance, F&& check) {
    PropertyResult& r = slot(property);
    ++r.entries;
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) {
      ++r.failures;
      if (r.failure_details.size() < 5) r.failure_details.push_back(provenance + (detail.empty() ? "" : ": " + detail));
    }
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  PropertyResult& slot(const std::string& property) {
    auto it = positions_.find(property);
    if (it != positions_.end()) return results_[it->second];
    positions_[property] = results_.size();
    results_.push_back({property, 0, 0, {}});
    return results_.back();
  }

  std::map<std::string, std::size_t> positions_;
  std::vector<PropertyResult> results_;
};

std::size_t shared_sides(const FreeSubgraph& a, const FreeSubgraph& b) {
  std::vector<LineIndex> x = a.sides, y = b.sides;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<LineIndex> both;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
  return both.size();
}

std::optional<PointIndex> common_point(const Triple& s, const Triple& t) {
  for (PointIndex p : s)
    if (std::find(t.begin(), t.end(), p) != t.end()) return p;
  return std::nullopt;
}

/// Sides of `a` missing `p` each cross exactly one side of `b` missing `p`,
/// and the crossing points are the points outside both subgraphs.
bool side_crossing_ok(const Configuration& config, const FreeSubgraph& a, const FreeSubgraph& b, PointIndex p,
                      std::string& detail) {
  auto sides_missing = [&](const FreeSubgraph& g) {
    std::vector<LineIndex> out;
    for (auto [i, j] : lex_pairs(g.order()))
      if (g.vertices[i] != p && g.vertices[j] != p) out.push_back(g.sides[pair_index(i, j, g.order())]);
    return out;
  };
  const auto sa = sides_missing(a), sb = sides_missing(b);
  std::set<PointIndex> crossings;
  for (LineIndex s : sa) {
    std::size_t hits = 0;
    for (LineIndex t : sb) {
      if (s == t) continue;
      if (auto q = common_point(config.line(s), config.line(t))) {
        ++hits;
        crossings.insert(*q);
      }
    }
    if (hits != 1) {
      detail = "a side crosses " + std::to_string(hits) + " sides";
      return false;
    }
  }
  std::set<PointIndex> outside;
  for (PointIndex q = 0; q < config.point_count(); ++q)
    if (!a.contains(q) && !b.contains(q)) outside.insert(q);
  if (crossings != outside) {
    detail = "crossing points differ from the common complement points";
    return false;
  }
  return true;
}

std::size_t collinearity_difference(const Configuration& x, const Configuration& y) {
  std::size_t diff = 0;
  for (PointIndex a = 0; a < x.point_count(); ++a)
    for (PointIndex b = a + 1; b < x.point_count(); ++b)
      if (x.collinear(a, b) != y.collinear(a, b)) ++diff;
  return diff;
}

}  // namespace

BatteryReport run_property_battery(std::size_t n_max, std::uint64_t seed) {
  return run_property_battery(build_corpus(n_max, seed), n_max, seed);
}

BatteryReport run_property_battery(const std::vector<CorpusEntry>& corpus, std::size_t n_max, std::uint64_t seed) {
  BatteryReport report;
  report.n_max = n_max;
  report.seed = seed;
  report.corpus_size = corpus.size();
  Tally tally;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::map<std::size_t, Configuration> grassmannians;
  std::vector<std::string> digests(corpus.size());

  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const CorpusEntry& e = corpus[idx];
    const Configuration& M = e.configuration;
    const std::size_t n = e.order();
    const std::string& who = e.provenance;
    const auto subs = enumerate_free_complete(M, n);
    const std::size_t m = subs.size();

    tally.run("validation", who, [&](std::string& d) {
      if (!(validate_configuration(M.to_raw()) == M)) return d = "revalidation differs", false;
      auto index = binomial_index(M);
      return index && index->m == e.index && m == e.subgraph_count;
    });
    tally.run("io_roundtrip", who, [&](std::string&) {
      const std::string text = emit_config(M);
      const Configuration back = parse_config(text);
      return back == M && emit_config(back) == text;
    });
    if (M.point_count() <= kOracleCeiling) {
      tally.run("enumeration_equals_oracle", who, [&](std::string& d) {
        const auto oracle = reference::free_complete_subsets(M, n);
        d = "pruned " + std::to_string(m) + ", oracle " + std::to_string(oracle.size());
        return label_sets(M, subs) == oracle;
      });
    }
    tally.run("count_bound", who, [&](std::string& d) {
      d = std::to_string(m) + " free K_" + std::to_string(n);
      return m <= n + 1 && m != n;
    });
    tally.run("max_count_iff_grassmannian", who, [&](std::string&) {
      auto [it, fresh] = grassmannians.try_emplace(n + 1);
      if (fresh) it->second = grassmannian(n + 1);
      return (m == n + 1) == are_isomorphic(M, it->second);
    });
    if (e.origin == Origin::Grassmannian) {
      tally.run("grassmannian_count", who, [&](std::string& d) {
        d = std::to_string(m);
        return m == n + 1 && label_sets(M, subs) == sorted_sets(e.designated);
      });
    }
    if (e.origin == Origin::Veronesian && e.index >= 5) {
      tally.run("veronesian_three", who, [&](std::string& d) {
        d = std::to_string(m);
        return m == 3 && label_sets(M, subs) == sorted_sets(e.designated);
      });
    }
    if (!e.designated.empty()) {
      tally.run("designated_free", who, [&](std::string& d) {
        for (const auto& set : e.designated) {
          std::vector<PointIndex> points;
          for (const std::string& label : set) points.push_back(M.index_of(label));
          if (!is_freely_contained(M, points)) return d = join(set), false;
        }
        return true;
      });
    }
    if (e.origin == Origin::Extend) {
      tally.run("extend_adds_one", who, [&](std::string& d) {
        const CorpusEntry& parent = corpus.at(*e.parent);
        d = std::to_string(parent.subgraph_count) + " -> " + std::to_string(m);
        return m == parent.subgraph_count + 1 && e.index == parent.index + 1 &&
               label_sets(M, subs) == e.designated;
      });
    }
    if (e.origin == Origin::Swap) {
      tally.run("swap_kill", who, [&](std::string& d) {
        const CorpusEntry& parent = corpus.at(*e.parent);
        const std::size_t diff = collinearity_difference(parent.configuration, M);
        d = std::to_string(m) + " subgraphs, " + std::to_string(diff) + " collinearity changes";
        return m == 0 && parameters(M) == parameters(parent.configuration) && diff == 4;
      });
    }
    if (m == 2 && n >= 4) {
      tally.run("swap_candidates_exist", who, [&](std::string&) {
        return !find_swap_candidates(M, subs[0], subs[1]).empty();
      });
    }
    if (m >= 2) {
      tally.run("common_vertex", who, [&](std::string& d) {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = i + 1; j < m; ++j) {
            std::vector<PointIndex> both;
            std::set_intersection(subs[i].vertices.begin(), subs[i].vertices.end(), subs[j].vertices.begin(),
                                  subs[j].vertices.end(), std::back_inserter(both));
            if (both.size() != 1) return d = std::to_string(both.size()) + " common vertices", false;
          }
        }
        return true;
      });
      tally.run("common_sides", who, [&](std::string& d) {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = i + 1; j < m; ++j) {
            const std::size_t shared = shared_sides(subs[i], subs[j]);
            if (shared != n - 1) return d = std::to_string(shared) + " common sides", false;
          }
        }
        return true;
      });
      tally.run("side_crossing", who, [&](std::string& d) {
        const auto inter = intersection_structure(M, subs);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i + 1; j < m; ++j)
            if (!side_crossing_ok(M, subs[i], subs[j], inter.center(i, j), d)) return false;
        return true;
      });
      tally.run("structure_report", who, [&](std::string& d) {
        const StructureReport r = structure_report(M, subs);
        const std::size_t k = n + 1 - m;
        d = "|Z|=" + std::to_string(r.axis_points.size()) + " |G|=" + std::to_string(r.axis_lines.size());
        return r.axis_points.size() == binomial(k, 2) && r.axis_lines.size() == binomial(k, 3);
      });
    }
    if (m >= 3) {
      tally.run("collinear_centers", who, [&](std::string& d) {
        const auto inter = intersection_structure(M, subs);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
              const PointIndex a = inter.center(i, j), b = inter.center(i, k), c = inter.center(j, k);
              Triple t{a, b, c};
              std::sort(t.begin(), t.end());
              if (!M.find_line(t)) return d = "centers of " + std::to_string(i) + "," + std::to_string(j) + "," +
                                               std::to_string(k) + " are not a line",
                                         false;
            }
          }
        }
        return inter.embedding_ok;
      });
    }
    if (m >= 2 && m + 1 <= n) {
      tally.run("decompose_roundtrip", who, [&](std::string&) {
        return are_isomorphic(perspective_system(decompose(M, subs)), M);
      });
    }
    if (m >= 1) {
      tally.run("complement_roundtrip", who, [&](std::string& d) {
        for (const FreeSubgraph& w : subs) {
          const Configuration c = complement(M, w);
          auto index = binomial_index(c);
          if (!index || index->m != n) return d = "complement is not binomial of index n", false;
          if (!is_regular_subconfiguration(M, c)) return d = "complement is not a subspace", false;
          const Labelling mu = side_labelling(M, w);
          if (!(attach_complete(mu.domain, mu, c) == M)) return d = "reattaching differs", false;
        }
        return true;
      });
    }
    tally.run("relabel_invariance", who, [&](std::string&) {
      std::vector<PointIndex> perm(M.point_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Configuration shuffled = permute_points(M, perm);
      const CanonicalForm form = canonical_form(M);
      digests[idx] = form.digest();
      return canonical_form(shuffled) == form && count_free(shuffled, n) == m;
    });
    tally.run("replay_isomorphic", who, [&](std::string&) { return are_isomorphic(e.replay(), M); });
  }

  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx)
    if (!digests[idx].empty()) classes[digests[idx]].push_back(idx);
  for (const auto& [digest, members] : classes) {
    for (std::size_t t = 1; t < members.size(); ++t) {
      const CorpusEntry& a = corpus[members.front()];
      const CorpusEntry& b = corpus[members[t]];
      tally.run("isomorphic_equal_counts", b.provenance, [&](std::string&) {
        return !are_isomorphic(a.configuration, b.configuration) || a.subgraph_count == b.subgraph_count;
      });
    }
  }
  report.properties = tally.take();
  return report;
}

std::vector<std::size_t> admissible_counts(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  out.push_back(n + 1);
  return out;
}

namespace {

ExistenceWitness confirm(std::size_t n, std::size_t m, CorpusEntry entry) {
  if (entry.order() != n || entry.subgraph_count != m) {
    throw Error(ErrorCode::WitnessGap, "witness '" + entry.provenance + "' has " +
                                           std::to_string(entry.subgraph_count) + " free K_" +
                                           std::to_string(entry.order()) + ", wanted " + std::to_string(m) +
                                           " free K_" + std::to_string(n));
  }
  ExistenceWitness w;
  w.n = n;
  w.m = m;
  w.oracle_count = reference::count_free_complete(entry.configuration, n);
  if (w.oracle_count != m) {
    throw Error(ErrorCode::PropertyFailure, "oracle counts " + std::to_string(w.oracle_count) + " free K_" +
                                                std::to_string(n) + " in '" + entry.provenance + "'");
  }
  w.entry = std::move(entry);
  return w;
}

std::optional<CorpusEntry> swap_to_zero(const CorpusEntry& in) {
  const Configuration source = in.configuration;
  const auto subs = subgraphs_of(in);
  for (const SwapCertificate& cert : find_swap_candidates(source, subs[0], subs[1])) {
    CorpusEntry e = make_entry(swap_provenance(in.provenance, cert), Origin::Swap, [source, cert] { return swap_kill(source, cert); });
    if (e.subgraph_count == 0) return e;
  }
  return std::nullopt;
}

std::vector<ExistenceWitness> existence_level(std::size_t n) {
  std::map<std::size_t, CorpusEntry> found;
  if (n == 4) {
    const CensusReport census = classify_veblen_labellings();
    const auto X = census_vertices();
    for (const CensusClass& c : census.classes) {
      if (found.contains(c.free_k4)) continue;
      const Labelling mu = c.representative;
      found.emplace(c.free_k4, make_entry("census class free_k4=" + std::to_string(c.free_k4) + " mu=" +
                                              join(mu.image, ","),
                                          Origin::Census, [X, mu] { return attach_complete(X, mu, grassmannian(4)); }));
    }
  } else {
    for (ExistenceWitness& w : existence_level(n - 1)) {
      if (w.m + 2 > n) continue;
      const Configuration source = w.entry.configuration;
      const std::size_t order = n - 1;
      found.emplace(w.m + 1, make_entry("extend(" + w.entry.provenance + ")", Origin::Extend, [source, order] {
                      return extend_one_more(source, enumerate_free_complete(source, order));
                    }));
    }
    found.emplace(n + 1,
                  make_entry("grassmannian " + std::to_string(n + 1), Origin::Grassmannian, [n] { return grassmannian(n + 1); }));
  }
  if (auto two = found.find(2); two != found.end()) {
    if (auto zero = swap_to_zero(two->second)) found.emplace(0, std::move(*zero));
  }

  std::vector<ExistenceWitness> out;
  std::vector<std::string> missing;
  for (std::size_t m : admissible_counts(n)) {
    auto it = found.find(m);
    if (it == found.end()) {
      missing.push_back(std::to_string(m));
      continue;
    }
    out.push_back(confirm(n, m, std::move(it->second)));
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::WitnessGap, "no witness for m in {" + join(missing, ",") + "} at n=" + std::to_string(n));
  }
  return out;
}

}  // namespace

std::vector<ExistenceWitness> build_existence_corpus(std::size_t n) {
  if (n < 4 || n > 6) throw Error(ErrorCode::OutOfRange, "existence corpus needs 4 <= n <= 6");
  return existence_level(n);
}

}  // namespace psts
