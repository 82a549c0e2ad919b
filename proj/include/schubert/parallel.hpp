#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace schubert {

inline unsigned default_jobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

// Index range owned by one worker. The owner takes from the front; thieves
// split off the back half.
struct StealRange {
  std::mutex mutex;
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::optional<std::size_t> pop_front() {
    std::lock_guard lock(mutex);
    if (lo == hi) return std::nullopt;
    return lo++;
  }

  std::size_t remaining() {
    std::lock_guard lock(mutex);
    return hi - lo;
  }

  // Moves the back half into [*out_lo, *out_hi); false when nothing to take.
  bool steal_half(std::size_t& out_lo, std::size_t& out_hi) {
    std::lock_guard lock(mutex);
    const std::size_t n = hi - lo;
    if (n == 0) return false;
    const std::size_t take = (n + 1) / 2;
    out_lo = hi - take;
    out_hi = hi;
    hi = out_lo;
    return true;
  }
};

}  // namespace detail

/// Evaluates fn(i) for every i in [0, count) on `jobs` threads with range
/// stealing and returns the results in index order. Exceptions thrown by fn
/// are rethrown on the calling thread (the first one wins).
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<R>> slots(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(
                                                   std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    std::vector<std::unique_ptr<detail::StealRange>> ranges;
    for (unsigned k = 0; k < jobs; ++k) {
      auto r = std::make_unique<detail::StealRange>();
      r->lo = count * k / jobs;
      r->hi = count * (k + 1) / jobs;
      ranges.push_back(std::move(r));
    }
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&](unsigned self) {
      auto& mine = *ranges[self];
      for (;;) {
        while (auto i = mine.pop_front()) {
          try {
            slots[*i].emplace(fn(*i));
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
        // Steal from the victim with the most work left.
        std::size_t best = 0;
        unsigned victim = self;
        for (unsigned k = 0; k < jobs; ++k) {
          if (k == self) continue;
          auto rem = ranges[k]->remaining();
          if (rem > best) best = rem, victim = k;
        }
        if (victim == self) return;
        std::size_t lo, hi;
        if (!ranges[victim]->steal_half(lo, hi)) continue;
        std::lock_guard lock(mine.mutex);
        mine.lo = lo;
        mine.hi = hi;
      }
    };
    std::vector<std::jthread> threads;
    for (unsigned k = 0; k < jobs; ++k) threads.emplace_back(worker, k);
    threads.clear();
    if (error) std::rethrow_exception(error);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace schubert
