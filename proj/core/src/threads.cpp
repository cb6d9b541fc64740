#include "psts/threads.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace psts {

std::size_t search_threads() {
  if (const char* env = std::getenv("PSTS_THREADS")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace psts
