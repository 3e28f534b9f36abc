#include "nilvar/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nilvar {

int worker_count() {
  if (const char* env = std::getenv("NILVAR_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace nilvar
