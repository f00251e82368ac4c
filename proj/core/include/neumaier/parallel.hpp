#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace neumaier {

/// Thread budget handed down from the caller. Work is split into index
/// chunks claimed from a shared counter; results must be written into
/// index-addressed slots so that output order never depends on scheduling.
class Workers {
 public:
  explicit Workers(unsigned threads = 1) : threads_(std::max(1u, threads)) {}

  unsigned size() const { return threads_; }

  template <typename Fn>
  void for_each_index(std::size_t count, Fn&& fn, std::size_t chunk = 16) const {
    if (threads_ == 1 || count <= chunk) {
      for (std::size_t i = 0; i < count; ++i) fn(i);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
      try {
        for (;;) {
          const std::size_t begin = next.fetch_add(chunk);
          if (begin >= count) break;
          const std::size_t end = std::min(count, begin + chunk);
          for (std::size_t i = begin; i < end; ++i) fn(i);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    };
    const unsigned n = std::min<std::size_t>(threads_, (count + chunk - 1) / chunk);
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(body);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

 private:
  unsigned threads_;
};

}  // namespace neumaier
