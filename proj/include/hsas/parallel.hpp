#pragma once

#include <cstddef>
#include <functional>

namespace hsas {

/// Worker cap for parallel_for; 1 (the default) runs everything inline.
void set_max_threads(int n);
int max_threads();

/// Runs fn over [0, n) in statically partitioned contiguous chunks. Chunk
/// boundaries depend only on n and the thread cap, and callers only write to
/// disjoint locations, so results are identical for every thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hsas
