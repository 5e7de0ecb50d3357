#pragma once

#include <cstddef>
#include <functional>

namespace peer {

// Process-wide worker cap; the CLI exposes it as --threads. 0 = hardware.
void set_max_threads(int n);
int max_threads();

// Deterministic parallel map: fn(i) may only write state owned by index i.
// Results are identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace peer
