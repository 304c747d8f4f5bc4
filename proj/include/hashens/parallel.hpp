#pragma once

#include <cstddef>
#include <functional>

namespace hashens {

// 0 means "use hardware concurrency"; the result is always >= 1.
std::size_t resolve_threads(std::size_t requested);

// Runs fn(0..n-1) on up to n_threads workers. Iterations must be independent
// and write only to their own slots; the first exception is rethrown after
// all workers join. Results never depend on scheduling.
void parallel_for(std::size_t n, std::size_t n_threads, const std::function<void(std::size_t)>& fn);

}  // namespace hashens
