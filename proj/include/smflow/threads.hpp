#pragma once

#include <cstddef>
#include <functional>

namespace smflow {

/// Worker count: min(hardware, SMFLOW_THREADS) with SMFLOW_THREADS >= 1.
std::size_t worker_count();

/// Deterministic parallel loop over [0, n): fixed block partition, results
/// must be written to disjoint slots by the body.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace smflow
