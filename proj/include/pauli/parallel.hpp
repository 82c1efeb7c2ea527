#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pauli {

/// Worker count for a kernel: `requested` if positive, otherwise the OpenMP
/// default (1 without OpenMP).
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int max_threads() { return resolve_threads(0); }

}  // namespace pauli
