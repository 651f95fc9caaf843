#ifndef DOMAINLAB_PARALLEL_HPP
#define DOMAINLAB_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace domainlab {

// Worker cap: DOMAIN_LAB_THREADS when set, else hardware concurrency (at
// most 8). Always at least 1.
int worker_count();

// Runs body(i) for i in [0, n). Work is handed out dynamically but callers
// must write results into per-index slots so the output is independent of
// scheduling.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace domainlab

#endif
