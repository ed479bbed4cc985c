#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weaklab {

/// Runs fn(0..n-1). workers <= 1 gives the serial reference path; otherwise
/// chunks are distributed over an OpenMP team. Callers must make fn(i)
/// independent of execution order so both paths produce identical results.
template <class Fn>
void for_each_chunk(uint64_t n, int workers, Fn&& fn) {
#ifdef _OPENMP
  if (workers > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<uint64_t>(i));
    return;
  }
#endif
  (void)workers;
  for (uint64_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace weaklab
