#pragma once

#include <cstdlib>

#if defined(EHRHART_LAB_HAVE_OPENMP)
#include <omp.h>
#endif

namespace ehrhart_lab {

// Worker count for parallel kernels: the OpenMP default, capped by the
// EHRHART_LAB_THREADS environment variable when it is a positive integer.
inline int thread_cap() {
#if defined(EHRHART_LAB_HAVE_OPENMP)
    int cap = omp_get_max_threads();
#else
    int cap = 1;
#endif
    if (const char* raw = std::getenv("EHRHART_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && v >= 1 && v < cap) {
            cap = static_cast<int>(v);
        }
    }
    return cap;
}

} // namespace ehrhart_lab
