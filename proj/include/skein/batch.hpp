#pragma once

#include <cstddef>
#include <functional>

namespace skein {

// Runs fn(0..count) with OpenMP when available; results must be written
// into pre-sized slots so output order never depends on scheduling.
void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& fn,
                        bool serial = false);

bool openmp_enabled();

}  // namespace skein
