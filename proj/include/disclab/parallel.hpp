#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace disclab {

// 0 means auto: DISCLAB_THREADS if set, else hardware concurrency, else 1.
inline unsigned resolve_thread_count(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("DISCLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(i) for i in [begin, end). Work is claimed from a shared counter so
// results must be written to per-index slots; the first exception is rethrown.
template <class F>
inline void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads, F&& fn) {
  if (begin >= end) return;
  threads = resolve_thread_count(threads);
  std::uint64_t span = end - begin;
  if (threads > span) threads = static_cast<unsigned>(span);
  if (threads <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{begin};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= end || failed.load(std::memory_order_relaxed)) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace disclab
