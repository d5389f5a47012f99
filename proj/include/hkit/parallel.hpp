#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hkit {

/// Worker count: --threads flag beats HKIT_THREADS beats hardware default.
int thread_count();
void set_thread_count(int n);

/// Chunked parallel loop over [begin, end). Each index owns its output
/// slot, so results do not depend on the worker count.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& body);

} // namespace hkit
