#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "psts/configuration.hpp"

namespace psts::reference {

/// Exhaustive check over every `size`-subset of the points, working from the
/// raw line list only. Slow on purpose; it shares no code with the pruned
/// search and serves as its oracle. Each result is an ascending label list;
/// the list of results is sorted.
std::vector<std::vector<std::string>> free_complete_subsets(const Configuration& config, std::size_t size);

inline std::size_t count_free_complete(const Configuration& config, std::size_t size) {
  return free_complete_subsets(config, size).size();
}

}  // namespace psts::reference
