#pragma once

// Index-parallel loops with a serial reference mode. Workers must write only
// to their own pre-sized slot, so both modes produce identical results and
// the serial mode stays the oracle for the parallel one.

#include <cstddef>

namespace yhdn {

enum class ExecMode { serial, parallel };

template <typename Fn>
void for_indices(std::size_t count, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace yhdn
