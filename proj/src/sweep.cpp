#include "tsdisp/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsdisp {

void run_indexed_serial(std::size_t n, const std::function<void(std::size_t)>& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

int effective_jobs(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

void run_indexed_parallel(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    const int threads = effective_jobs(jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
#else
    (void)jobs;
    run_indexed_serial(n, fn);
#endif
}

}  // namespace tsdisp
