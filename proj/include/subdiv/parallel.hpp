#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace subdiv {

/// Worker count: an explicit request wins, 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Reads SUBDIV_THREADS; returns `fallback` when unset. Throws on values that
/// are not positive integers.
inline unsigned threads_from_env(unsigned fallback = 1) {
  const char *raw = std::getenv("SUBDIV_THREADS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char *end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value <= 0 || value > 4096)
    throw std::invalid_argument("SUBDIV_THREADS must be a positive integer, got '" + std::string(raw) + "'");
  return static_cast<unsigned>(value);
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Items are
/// claimed dynamically; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
template <typename Fn> void parallel_for(std::size_t count, unsigned threads, Fn &&fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

} // namespace subdiv
