// SPDX-License-Identifier: Apache-2.0
#include "ulrich/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ulrich {

int thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("ULRICH_SCROLLS_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
            // fall through to the OpenMP default
        }
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn, Exec exec) {
    if (exec == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first;
    std::mutex guard;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
}

}  // namespace ulrich
