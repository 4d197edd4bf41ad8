#include "eigenid/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace eigenid {

std::size_t worker_count() {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("EIGENID_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  long parsed = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || parsed <= 0) return hw;  // 0 or junk = auto
  return static_cast<std::size_t>(parsed);
}

void parallel_for(Index count, const std::function<void(Index)>& body) {
  if (count <= 0) return;
  std::size_t workers = std::min<std::size_t>(worker_count(), static_cast<std::size_t>(count));
  if (workers <= 1) {
    for (Index i = 0; i < count; ++i) body(i);
    return;
  }

  // Errors are collected per index so the lowest failing index wins,
  // matching what sequential evaluation would have thrown first.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<Index> next{0};
  auto run = [&] {
    for (;;) {
      Index i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace eigenid
