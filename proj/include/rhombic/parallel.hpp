#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rhombic {

inline int default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Splits [0, n_items) into contiguous chunks, one per worker, and runs
// fn(state, begin, end) on each.  Per-chunk states are merged by the caller
// in chunk order, which keeps results independent of scheduling.
template <class State, class Fn>
void parallel_chunks(std::size_t n_items, int threads, std::vector<State>& states, Fn&& fn) {
  const std::size_t n_chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(std::max(threads, 1), n_items));
  states = std::vector<State>(n_chunks);
  if (n_chunks == 1) {
    fn(states[0], 0, n_items);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(n_chunks);
  const std::size_t per = (n_items + n_chunks - 1) / n_chunks;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t begin = c * per;
    const std::size_t end = std::min(n_items, begin + per);
    workers.emplace_back([&, c, begin, end] {
      try {
        fn(states[c], begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace rhombic
