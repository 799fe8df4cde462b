#pragma once

#include <cstddef>

namespace hardy {

// Every parallel kernel in this library writes disjoint output slots and
// reduces serially afterwards, so serial and parallel runs are bit-identical.
enum class Exec { serial, parallel };

bool openmp_compiled();
int max_threads();

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& f) {
    if (exec == Exec::parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace hardy
