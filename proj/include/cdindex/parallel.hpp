#ifndef CDINDEX_PARALLEL_HPP
#define CDINDEX_PARALLEL_HPP

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace cdx {

/* Execution policy for the kernels that have both a serial reference
 * implementation and an OpenMP one.  Results are identical by construction;
 * tests compare the two paths on the same inputs. */
enum class Exec { serial, parallel };

Exec defaultExec();
void setDefaultExec(Exec e);
int hardwareThreads();

inline bool runParallel(Exec e) {
#if defined(_OPENMP)
    return e == Exec::parallel;
#else
    (void)e;
    return false;
#endif
}

} // namespace cdx

#endif
