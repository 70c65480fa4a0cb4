#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hecke {

/// Number of worker threads to use when the caller passes 0.
inline unsigned default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Runs body(trial, acc) for every trial in [0, trials) on `threads` workers,
/// each with its own accumulator, then folds them with Acc::merge. When each
/// trial draws from its own stream and merge is commutative and associative
/// (integer sums, keyed maps), the result does not depend on scheduling.
template <class Acc, class Body>
Acc parallel_trials(std::uint64_t trials, unsigned threads, Body body, Acc init = Acc{}) {
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  constexpr std::uint64_t kChunk = 16;

  std::vector<Acc> partial(threads, init);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](unsigned id) {
    try {
      while (true) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= trials) break;
        const std::uint64_t end = std::min(trials, begin + kChunk);
        for (std::uint64_t t = begin; t < end; ++t) body(t, partial[id]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(trials);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Acc total = std::move(partial.front());
  for (std::size_t i = 1; i < partial.size(); ++i) total.merge(partial[i]);
  return total;
}

}  // namespace hecke
