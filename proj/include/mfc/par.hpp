#pragma once

// Particle loops are data-parallel: every kernel writes disjoint slots, and all
// cross-particle statistics go through order-fixed pairwise reductions, so the
// OpenMP and serial paths produce bitwise-identical results. The serial path is
// kept as the reference implementation for tests and the benchmark target.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mfc::par {

// force the serial reference path (also set by MFC_SERIAL=1)
void set_serial(bool on);
bool serial();

// honors MFC_THREADS when set, otherwise the OpenMP default
void init_from_env();
int thread_count();

template <class F>
inline void for_range(int n, F&& f) {
  if (serial()) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i) f(i);
}

}  // namespace mfc::par
