#pragma once

// Minimal fork-join executor. Work is split into contiguous index chunks and
// results are always combined in chunk order, so the worker count never
// changes what a computation returns.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace hullfilter {

class Executor {
 public:
  // Chunks never get smaller than this many items.
  static constexpr std::size_t kDefaultGrain = std::size_t{1} << 15;

  explicit Executor(std::size_t workers = default_workers(), std::size_t min_grain = kDefaultGrain)
      : workers_(std::max<std::size_t>(1, workers)), grain_(std::max<std::size_t>(1, min_grain)) {}

  static std::size_t default_workers() {
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }

  std::size_t workers() const noexcept { return workers_; }

  std::size_t chunk_count(std::size_t n) const noexcept {
    const std::size_t by_grain = (n + grain_ - 1) / grain_;
    return std::max<std::size_t>(1, std::min(workers_, by_grain));
  }

  // Calls fn(chunk, begin, end) once per chunk, chunk 0 on the calling thread.
  // The first exception thrown by any chunk is rethrown after all have joined.
  template <class Fn>
  void for_each_chunk(std::size_t n, Fn&& fn) const {
    const std::size_t chunks = chunk_count(n);
    auto bounds = [&](std::size_t c) { return n * c / chunks; };
    if (chunks == 1) {
      fn(std::size_t{0}, std::size_t{0}, n);
      return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    {
      std::vector<std::jthread> pool;
      pool.reserve(chunks - 1);
      for (std::size_t c = 1; c < chunks; ++c) {
        pool.emplace_back([&, c] {
          try {
            fn(c, bounds(c), bounds(c + 1));
          } catch (...) {
            errors[c] = std::current_exception();
          }
        });
      }
      try {
        fn(std::size_t{0}, bounds(0), bounds(1));
      } catch (...) {
        errors[0] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Reduces each chunk with `local(begin, end)` and folds the partial results
  // left to right with `combine`.
  template <class T, class Local, class Combine>
  T map_reduce(std::size_t n, T init, Local&& local, Combine&& combine) const {
    std::vector<T> partial(chunk_count(n), init);
    for_each_chunk(n, [&](std::size_t c, std::size_t begin, std::size_t end) { partial[c] = local(begin, end); });
    T acc = std::move(init);
    for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
    return acc;
  }

 private:
  std::size_t workers_;
  std::size_t grain_;
};

}  // namespace hullfilter
