#include "cpdskit/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <vector>

namespace cpdskit {

int thread_limit() {
  int limit = omp_get_max_threads();
  if (const char* env = std::getenv("CPDSKIT_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 256) {
      limit = static_cast<int>(value);
    }
  }
  return limit < 1 ? 1 : limit;
}

void for_each_index(std::size_t n, Execution execution,
                    const std::function<void(std::size_t)>& body) {
  if (execution == Execution::serial || n < 2 || thread_limit() == 1 ||
      omp_in_parallel()) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace cpdskit
