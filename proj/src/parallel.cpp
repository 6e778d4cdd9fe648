#include "lasd/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

#include "lasd/error.hpp"

namespace lasd {

namespace {

std::atomic<int> g_threads{0};

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LASD_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096) {
      throw ConfigError(std::string("LASD_THREADS must be a positive integer, got '") + env + "'");
    }
    return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

void set_threads(int threads) { g_threads.store(threads > 0 ? threads : 0); }

int current_threads() {
  const int t = g_threads.load();
  return t > 0 ? t : omp_get_max_threads();
}

bool in_parallel() { return omp_in_parallel() != 0; }

}  // namespace lasd
