#pragma once

#include <cstddef>
#include <functional>

namespace cpdskit {

enum class Execution { serial, parallel };

// Worker count for parallel loops: the OpenMP default, or the value of the
// CPDSKIT_THREADS environment variable when it holds an integer in [1, 256].
int thread_limit();

// Runs body(i) for i in [0, n). The parallel path uses an OpenMP dynamic
// schedule; the serial path runs in index order and is the reference used by
// the tests. The first exception thrown by any index is rethrown after the
// loop finishes.
void for_each_index(std::size_t n, Execution execution,
                    const std::function<void(std::size_t)>& body);

}  // namespace cpdskit
