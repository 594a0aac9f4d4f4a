#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace minci {

/// Worker count: MINCI_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
inline unsigned worker_count() {
  if (const char *env = std::getenv("MINCI_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) {
      return static_cast<unsigned>(n);
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Applies f to every element on a small thread pool. The output order is
/// the input order; if any call throws, the exception of the lowest index
/// is rethrown after all workers finish.
template <class T, class F>
auto parallel_map(const std::vector<T> &inputs, F f) -> std::vector<decltype(f(inputs[0]))> {
  using R = decltype(f(inputs[0]));
  const std::size_t n = inputs.size();
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(f(inputs[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work);
    }
    for (std::thread &t : pool) {
      t.join();
    }
  }
  for (const std::exception_ptr &e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  std::vector<R> out;
  out.reserve(n);
  for (std::optional<R> &s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

} // namespace minci
