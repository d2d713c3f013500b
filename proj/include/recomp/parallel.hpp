#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace recomp {

/// Selects between the OpenMP kernel and the serial reference kernel.
/// Both produce bit-identical results; the serial path is kept for tests
/// and for the benchmark baseline.
enum class ExecPolicy { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel
/// region are captured and the first one is rethrown on the calling thread.
template <typename Body>
void for_each_index(std::size_t n, ExecPolicy policy, Body&& body) {
    if (policy == ExecPolicy::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace recomp
