#include "skewalg/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewalg::par {

namespace {
std::atomic<int> g_jobs{0};
}

void set_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int jobs() { return g_jobs.load(); }

int detail::resolve_threads() {
    const int j = g_jobs.load();
    if (j > 0) return j;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace skewalg::par
