#include "psts/isomorphism.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace psts {

namespace {

using Coloring = std::vector<std::uint32_t>;

/// Individualisation-refinement search for the smallest leaf certificate.
///
/// Colourings are dense ranks; refinement splits classes by the sorted
/// multiset of colour pairs met on the lines through a point, ordered
/// first by the old colour. Subtrees are skipped by orbit pruning with the
/// automorphisms found so far, and by jumping back to the divergence point
/// whenever a leaf reproduces the first leaf.
class CanonSearch {
 public:
  explicit CanonSearch(const Configuration& config) : config_(config), v_(config.point_count()) {
    others_.resize(v_);
    for (PointIndex p = 0; p < v_; ++p) {
      for (LineIndex l : config.lines_through(p)) {
        const Triple& t = config.line(l);
        PointIndex x = kNoLine, y = kNoLine;
        for (PointIndex q : t) {
          if (q == p) continue;
          (x == kNoLine ? x : y) = q;
        }
        others_[p].emplace_back(x, y);
      }
    }
  }

  CanonicalForm run() {
    Coloring start(v_, 0);
    dfs(start);
    CanonicalForm form;
    form.point_count = v_;
    form.certificate = best_cert_;
    form.witness = best_labelling_;
    if (v_ == 0) form.certificate.clear();
    return form;
  }

 private:
  std::size_t colour_count(const Coloring& c) const {
    std::uint32_t top = 0;
    for (auto x : c) top = std::max(top, x);
    return v_ == 0 ? 0 : top + 1;
  }

  void refine(Coloring& colour) const {
    std::size_t classes = colour_count(colour);
    std::vector<std::vector<std::uint64_t>> sig(v_);
    std::vector<PointIndex> order(v_);
    while (classes < v_) {
      for (PointIndex p = 0; p < v_; ++p) {
        auto& s = sig[p];
        s.clear();
        s.push_back(colour[p]);
        for (auto [x, y] : others_[p]) {
          std::uint64_t cx = colour[x], cy = colour[y];
          if (cx > cy) std::swap(cx, cy);
          s.push_back(cx * v_ + cy);
        }
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      Coloring next(v_);
      for (std::size_t k = 0; k < v_; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++rank;
        next[order[k]] = rank;
      }
      const std::size_t next_classes = v_ == 0 ? 0 : rank + 1;
      colour = std::move(next);
      if (next_classes == classes) break;
      classes = next_classes;
    }
  }

  Coloring individualise(const Coloring& colour, PointIndex p) const {
    Coloring next(v_);
    for (PointIndex q = 0; q < v_; ++q) {
      next[q] = colour[q] + (colour[q] > colour[p] || (colour[q] == colour[p] && q != p) ? 1U : 0U);
    }
    return next;
  }

  std::vector<Triple> relabel(const std::vector<PointIndex>& labelling) const {
    std::vector<Triple> cert;
    cert.reserve(config_.line_count());
    for (const Triple& t : config_.lines()) {
      Triple r{labelling[t[0]], labelling[t[1]], labelling[t[2]]};
      std::sort(r.begin(), r.end());
      cert.push_back(r);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  void add_automorphism(const std::vector<PointIndex>& reference, const std::vector<PointIndex>& labelling) {
    std::vector<PointIndex> inv(v_);
    for (PointIndex p = 0; p < v_; ++p) inv[reference[p]] = p;
    std::vector<PointIndex> gamma(v_);
    bool identity = true;
    for (PointIndex p = 0; p < v_; ++p) {
      gamma[p] = inv[labelling[p]];
      identity = identity && gamma[p] == p;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  /// Returns the depth to unwind to, or -1 to continue normally.
  long leaf(const Coloring& colour) {
    std::vector<PointIndex> labelling(colour.begin(), colour.end());
    std::vector<Triple> cert = relabel(labelling);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = cert;
      first_labelling_ = labelling;
      first_path_ = path_;
      best_cert_ = std::move(cert);
      best_labelling_ = std::move(labelling);
      return -1;
    }
    if (cert == first_cert_) {
      add_automorphism(first_labelling_, labelling);
      std::size_t common = 0;
      while (common < path_.size() && common < first_path_.size() && path_[common] == first_path_[common]) ++common;
      return static_cast<long>(common);
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labelling_ = std::move(labelling);
    } else if (cert == best_cert_) {
      add_automorphism(best_labelling_, labelling);
    }
    return -1;
  }

  std::vector<PointIndex> stabiliser_orbits() const {
    std::vector<PointIndex> parent(v_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](PointIndex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](PointIndex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (PointIndex p = 0; p < v_; ++p) {
        PointIndex a = find(p), b = find(gamma[p]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (PointIndex p = 0; p < v_; ++p) parent[p] = find(p);
    return parent;
  }

  long dfs(Coloring colour) {
    refine(colour);
    if (colour_count(colour) == v_) return leaf(colour);

    std::uint32_t target = 0;
    {
      std::vector<std::size_t> sizes(v_, 0);
      for (auto x : colour) ++sizes[x];
      while (sizes[target] <= 1) ++target;
    }
    std::vector<PointIndex> cell;
    for (PointIndex p = 0; p < v_; ++p)
      if (colour[p] == target) cell.push_back(p);

    const long depth = static_cast<long>(path_.size());
    std::vector<PointIndex> explored;
    std::vector<PointIndex> orbit;
    std::size_t orbit_generators = static_cast<std::size_t>(-1);
    for (PointIndex p : cell) {
      if (!explored.empty()) {
        if (orbit_generators != generators_.size()) {
          orbit = stabiliser_orbits();
          orbit_generators = generators_.size();
        }
        const bool seen = std::any_of(explored.begin(), explored.end(),
                                      [&](PointIndex e) { return orbit[e] == orbit[p]; });
        if (seen) continue;
      }
      path_.push_back(p);
      const long unwind = dfs(individualise(colour, p));
      path_.pop_back();
      explored.push_back(p);
      if (unwind >= 0 && unwind < depth) return unwind;
    }
    return -1;
  }

  const Configuration& config_;
  std::size_t v_;
  std::vector<std::vector<std::pair<PointIndex, PointIndex>>> others_;
  std::vector<std::vector<PointIndex>> generators_;
  std::vector<PointIndex> path_;

  bool have_first_ = false;
  std::vector<Triple> first_cert_;
  std::vector<PointIndex> first_labelling_;
  std::vector<PointIndex> first_path_;
  std::vector<Triple> best_cert_;
  std::vector<PointIndex> best_labelling_;
};

}  // namespace

std::string CanonicalForm::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint32_t word) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (word >> (8 * byte)) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(point_count));
  for (const Triple& t : certificate)
    for (PointIndex p : t) mix(p);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CanonicalForm canonical_form(const Configuration& config) {
  if (config.point_count() == 0) return CanonicalForm{};
  return CanonSearch(config).run();
}

std::optional<std::vector<PointIndex>> find_isomorphism(const Configuration& a, const Configuration& b) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count()) return std::nullopt;
  if (parameters(a) != parameters(b)) return std::nullopt;
  const CanonicalForm fa = canonical_form(a);
  const CanonicalForm fb = canonical_form(b);
  if (!(fa == fb)) return std::nullopt;
  std::vector<PointIndex> inv_b(b.point_count());
  for (PointIndex p = 0; p < b.point_count(); ++p) inv_b[fb.witness[p]] = p;
  std::vector<PointIndex> map(a.point_count());
  for (PointIndex p = 0; p < a.point_count(); ++p) map[p] = inv_b[fa.witness[p]];
  return map;
}

}  // namespace psts
