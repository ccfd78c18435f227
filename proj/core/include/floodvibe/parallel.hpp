#pragma once

#include <functional>

namespace floodvibe {

/// Worker count derived from FLOODVIBE_THREADS (0 or unset = hardware
/// concurrency). Clamped to [1, 256].
int thread_count();

/// Runs fn(begin, end) over disjoint row blocks covering [0, n).
/// Output written to disjoint ranges is schedule-independent, so results
/// match sequential execution bit for bit.
void parallel_rows(int n, const std::function<void(int, int)>& fn);

}  // namespace floodvibe
