#pragma once

#include <cstddef>

namespace psts {

/// Worker count for parallel searches: `PSTS_THREADS` when set to a
/// positive integer, otherwise the available hardware parallelism.
std::size_t search_threads();

}  // namespace psts
