#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace maplab::detail {

inline unsigned resolve_workers(unsigned requested, std::size_t jobs) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, jobs)));
}

// Runs fn(worker, begin, end) over contiguous slices of [0, jobs). The first
// exception thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_slices(std::size_t jobs, unsigned workers, Fn&& fn) {
  workers = resolve_workers(workers, jobs);
  if (workers == 1) {
    fn(0u, std::size_t{0}, jobs);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = jobs * w / workers;
    const std::size_t end = jobs * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace maplab::detail
