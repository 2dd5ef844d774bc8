#include "turanforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace turanforge {

unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("TURANFORGE_THREADS")) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec == std::errc() && *ptr == '\0' && v > 0) return v;
  }
  return 1;
}

namespace {

template <class Work>
void run_workers(std::size_t n, unsigned threads, Work&& work) {
  const unsigned t = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, threads), n));
  if (t <= 1) {
    work();
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

} // namespace

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  std::atomic<std::size_t> next{0};
  run_workers(n, threads, [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  });
}

std::optional<std::size_t> parallel_find_first(std::size_t n, unsigned threads,
                                               const std::function<bool(std::size_t)>& pred) {
  if (n == 0) return std::nullopt;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  run_workers(n, threads, [&] {
    for (std::size_t i = next++; i < n && i < best.load(); i = next++) {
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  });
  const std::size_t b = best.load();
  return b < n ? std::optional<std::size_t>(b) : std::nullopt;
}

} // namespace turanforge
