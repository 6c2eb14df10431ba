#pragma once

#include <cstdint>
#include <functional>

namespace qpf {

/// Worker count to use: `requested` when positive, otherwise the
/// QPF_RDM_THREADS environment variable, otherwise hardware concurrency.
int resolve_workers(int requested = 0);

/// Runs fn(i) for every i in [0, count) across `workers` threads in
/// contiguous chunks. Tasks must not share mutable state; results should be
/// written to per-index slots so output order stays deterministic.
void parallel_for(std::uint64_t count, int workers,
                  const std::function<void(std::uint64_t)>& fn);

} // namespace qpf
