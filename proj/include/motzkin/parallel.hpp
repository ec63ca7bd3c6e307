#pragma once

#include <cstddef>
#include <limits>
#include <span>

namespace motzkin {

inline constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

// Index of the first item failing `pred`, or kNoFailure. A throwing
// predicate counts as a failure.
template <typename T, typename Pred>
std::size_t first_failure_serial(std::span<const T> items, Pred pred) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool ok = false;
    try {
      ok = pred(items[i]);
    } catch (...) {
      ok = false;
    }
    if (!ok) return i;
  }
  return kNoFailure;
}

// Same answer as first_failure_serial, with the sweep split across OpenMP
// threads. `pred` must be safe to call concurrently.
template <typename T, typename Pred>
std::size_t first_failure(std::span<const T> items, Pred pred) {
  std::size_t first = kNoFailure;
  const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    bool ok = false;
    try {
      ok = pred(items[static_cast<std::size_t>(i)]);
    } catch (...) {
      ok = false;
    }
    if (!ok && static_cast<std::size_t>(i) < first) first = static_cast<std::size_t>(i);
  }
  return first;
}

template <typename T, typename Pred>
bool all_of(std::span<const T> items, Pred pred) {
  return first_failure(items, pred) == kNoFailure;
}

}  // namespace motzkin
