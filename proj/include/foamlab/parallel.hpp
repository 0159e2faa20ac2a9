#pragma once
/// \file parallel.hpp
/// Minimal fork-join helper; width comes from FOAMLAB_THREADS.

#include <cstddef>
#include <functional>

namespace foamlab {

/// Worker count: FOAMLAB_THREADS if set and positive, else hardware concurrency.
unsigned thread_width();

/// Runs body(i) for i in [0, n). Jobs are claimed from a shared counter;
/// the first exception thrown by any job is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace foamlab
