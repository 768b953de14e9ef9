#pragma once

// First-hit scans over an indexed search space.
//
// probe(i) returns the first violation (in enumeration order) whose outermost
// index is i, or nullopt. Both executions return the hit with the smallest i,
// so a parallel scan reports exactly the witness the serial scan would.

#include <omp.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace eurep {

enum class Execution { serial, parallel };

namespace detail {

template <class Probe>
using ProbeResult = std::invoke_result_t<Probe&, std::size_t>;

}  // namespace detail

template <class Probe>
detail::ProbeResult<Probe> first_hit_serial(std::size_t count, Probe&& probe) {
  for (std::size_t i = 0; i < count; ++i) {
    if (auto hit = probe(i)) return hit;
  }
  return std::nullopt;
}

template <class Probe>
detail::ProbeResult<Probe> first_hit_parallel(std::size_t count, Probe&& probe) {
  std::vector<detail::ProbeResult<Probe>> hits(count);
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx > best.load(std::memory_order_relaxed)) continue;
    try {
      hits[idx] = probe(idx);
    } catch (...) {
#pragma omp critical(eurep_scan_error)
      if (!error) error = std::current_exception();
    }
    if (hits[idx]) {
      std::size_t current = best.load(std::memory_order_relaxed);
      while (idx < current && !best.compare_exchange_weak(current, idx, std::memory_order_relaxed)) {
      }
    }
  }

  if (error) std::rethrow_exception(error);
  const std::size_t winner = best.load();
  if (winner == count) return std::nullopt;
  return std::move(hits[winner]);
}

template <class Probe>
detail::ProbeResult<Probe> first_hit(std::size_t count, Probe&& probe, Execution exec) {
  if (exec == Execution::serial) return first_hit_serial(count, probe);
  return first_hit_parallel(count, probe);
}

/// Fills out[i] = f(i) for every i.
template <class T, class F>
void fill_indexed(std::vector<T>& out, F&& f, Execution exec) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(out.size()); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(eurep_fill_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace eurep
