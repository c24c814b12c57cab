#pragma once

#include <functional>
#include <vector>

namespace vg {

// VIRTGRAPH_WORKERS if set and positive, else the hardware concurrency.
int worker_count();

// Runs body(chunk_begin, chunk_end) over [0, total) split into fixed chunks and returns
// the per-chunk results in chunk order, so reductions are deterministic.
template <class T>
std::vector<T> parallel_chunks(long total, int chunks, const std::function<T(long, long)>& body);

}  // namespace vg

#include "virtgraph/parallel_impl.hpp"
