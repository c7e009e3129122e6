#pragma once

#include <cstddef>
#include <functional>

namespace tsdisp {

/// Apply fn(i) for i in [0, n).  The serial loop is the reference
/// implementation; the parallel one runs the same body under OpenMP with
/// `jobs` threads (jobs <= 0: all cores).  Both must produce identical
/// results for pure bodies writing to disjoint slots.
void run_indexed_serial(std::size_t n, const std::function<void(std::size_t)>& fn);
void run_indexed_parallel(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

/// Number of threads the parallel runner would use.
int effective_jobs(int jobs);

}  // namespace tsdisp
