#pragma once

#ifdef NCNN_HAVE_OPENMP
#include <omp.h>
#endif

namespace ncnn {

// Index-parallel kernel driver.  jobs == 1 is the serial reference path;
// jobs == 0 means "all hardware threads".  Bodies must write only to
// per-index slots so that serial and parallel runs produce identical results.
template <class Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
#ifdef NCNN_HAVE_OPENMP
  if (jobs != 1 && count > 1) {
    int threads = jobs == 0 ? omp_get_max_threads() : jobs;
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
#endif
  for (long long i = 0; i < count; ++i) fn(i);
}

inline int hardware_jobs() {
#ifdef NCNN_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ncnn
