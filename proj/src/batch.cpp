#include "skein/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skein {

void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& fn,
                        bool serial) {
#ifdef _OPENMP
  if (!serial) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)serial;
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace skein
