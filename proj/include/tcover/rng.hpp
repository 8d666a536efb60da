#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace tcover {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer over (seed, stream); gives each trial its own
/// independent generator so results do not depend on thread scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Runs fn(i) for i in [0, trials) across hardware threads and returns the
/// results in trial order.
template <class Fn>
auto run_trials(std::uint64_t trials, Fn fn) -> std::vector<decltype(fn(std::uint64_t{}))> {
  using R = decltype(fn(std::uint64_t{}));
  std::vector<R> out(trials);
  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, (trials + 1023) / 1024);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < trials; ++i) out[i] = fn(i);
    return out;
  }
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(trials, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) out[i] = fn(i);
      });
    }
  }
  return out;
}

}  // namespace tcover
