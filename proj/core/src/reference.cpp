#include "psts/reference.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace psts::reference {

namespace {

using LabelSet = std::set<std::string>;

bool subset_is_free(const std::vector<std::string>& pts,
                    const std::map<std::pair<std::string, std::string>, std::size_t>& pair_line,
                    const std::vector<LabelSet>& lines) {
  std::vector<std::size_t> sides;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto it = pair_line.find({pts[i], pts[j]});
      if (it == pair_line.end()) return false;
      sides.push_back(it->second);
    }
  }
  const LabelSet inside(pts.begin(), pts.end());
  for (std::size_t s = 0; s < sides.size(); ++s) {
    for (std::size_t t = s + 1; t < sides.size(); ++t) {
      if (sides[s] == sides[t]) return false;
      for (const std::string& x : lines[sides[s]])
        if (lines[sides[t]].contains(x) && !inside.contains(x)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::string>> free_complete_subsets(const Configuration& config, std::size_t size) {
  const RawConfiguration raw = config.to_raw();
  std::vector<std::string> points = raw.points;
  std::sort(points.begin(), points.end());

  std::vector<LabelSet> lines;
  std::map<std::pair<std::string, std::string>, std::size_t> pair_line;
  for (const auto& line : raw.lines) {
    lines.emplace_back(line.begin(), line.end());
    for (const std::string& a : line)
      for (const std::string& b : line)
        if (a != b) pair_line[{a, b}] = lines.size() - 1;
  }

  std::vector<std::vector<std::string>> found;
  if (size == 0 || size > points.size()) return found;
  std::vector<bool> pick(points.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  std::vector<std::string> subset;
  do {
    subset.clear();
    for (std::size_t i = 0; i < points.size(); ++i)
      if (pick[i]) subset.push_back(points[i]);
    if (subset_is_free(subset, pair_line, lines)) found.push_back(subset);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace psts::reference
