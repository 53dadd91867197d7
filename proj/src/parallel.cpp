#include "cdindex/parallel.hpp"

namespace cdx {

namespace {
Exec g_default = Exec::parallel;
}

Exec defaultExec() { return g_default; }
void setDefaultExec(Exec e) { g_default = e; }

int hardwareThreads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace cdx
