#include "orlicz_lab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace orlicz_lab::parallel {

namespace {
std::atomic<int> g_cap{0};
}

int max_threads() {
  const int cap = g_cap.load();
  const int def = omp_get_max_threads();
  return cap > 0 && cap < def ? cap : def;
}

void set_max_threads(int n) { g_cap.store(n > 0 ? n : 0); }

void configure_from_env() {
  if (const char* env = std::getenv("ORLICZ_LAB_THREADS")) {
    try {
      set_max_threads(std::stoi(env));
    } catch (const std::exception&) {
      // ignored: malformed values leave the default in place
    }
  }
}

}  // namespace orlicz_lab::parallel
