#pragma once

#include <cstddef>
#include <cstdint>

namespace skewalg::par {

// Worker count used by the OpenMP kernels. 0 means "library default"
// (whatever OpenMP picks). Any positive value forces that many threads.
void set_jobs(int jobs);
int jobs();

// Runs f(i) for i in [0, n) with the configured worker count. Results must
// be written to slots indexed by i so the outcome is independent of the
// schedule; callers then reduce the slots in index order.
template <typename F>
void for_index(std::size_t n, F&& f);

namespace detail {
int resolve_threads();
}

}  // namespace skewalg::par

#ifdef _OPENMP
#include <omp.h>

template <typename F>
void skewalg::par::for_index(std::size_t n, F&& f) {
    const int threads = detail::resolve_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        f(static_cast<std::size_t>(i));
    }
}
#else
template <typename F>
void skewalg::par::for_index(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}
#endif
