#pragma once

#include <cstddef>
#include <functional>

namespace nebi::core {

// Worker cap: min(hardware_concurrency, NEBI_THREADS) with NEBI_THREADS
// read once from the environment. Always >= 1.
std::size_t thread_budget();

// Runs fn(i) for i in [0, n). Work is split into contiguous static chunks,
// so any shared output written at slot i is placed identically regardless
// of scheduling. fn must not touch state shared across indices.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace nebi::core
