#pragma once

// Thin OpenMP wrapper for the data-parallel bulk work (batch verification,
// chunked products, matrix fills).  Serial fallback when OpenMP is off or the
// range is small.  Exceptions thrown inside a parallel region are captured
// and rethrown on the calling thread.

#include <atomic>
#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcg::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool enabled() { return max_threads() > 1; }

template <class Fn>
void for_index(std::size_t n, Fn&& fn, std::size_t grain = 1) {
#ifdef _OPENMP
  if (n >= 2 * grain && max_threads() > 1) {
    std::exception_ptr err;
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(mcg_par_err)
        {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline double wtime() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return 0.0;
#endif
}

}  // namespace mcg::par
