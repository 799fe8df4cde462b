#include "hardycert/parallel.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hardy {

bool openmp_compiled() {
#if defined(_OPENMP)
    return true;
#else
    return false;
#endif
}

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace hardy
