#include "support.hpp"

#include <cstdlib>

namespace erdos {

int thread_budget() {
  const char* env = std::getenv("ERDOS_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  if (v > 64) return 64;
  return static_cast<int>(v);
}

}  // namespace erdos
