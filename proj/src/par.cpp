#include "mfc/par.hpp"

#include <atomic>
#include <cstdlib>

namespace mfc::par {

namespace {
std::atomic<bool> g_serial{false};
}

void set_serial(bool on) { g_serial.store(on); }

bool serial() { return g_serial.load(std::memory_order_relaxed); }

void init_from_env() {
  if (const char* s = std::getenv("MFC_SERIAL"); s && s[0] == '1') g_serial.store(true);
#ifdef _OPENMP
  if (const char* t = std::getenv("MFC_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

int thread_count() {
  if (serial()) return 1;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mfc::par
