#pragma once

// Data-parallel kernels. Every parallel loop writes per-index results into a
// buffer; reductions then run serially in index order, so results do not
// depend on the thread count. The *_serial variants are the plain reference
// loops used by the tests and the benchmark.

#include <cstddef>
#include <exception>
#include <limits>
#include <span>
#include <vector>

#include <omp.h>

namespace orlicz_lab::parallel {

int max_threads();
/// Caps the worker count; values < 1 restore the OpenMP default.
void set_max_threads(int n);
/// Reads ORLICZ_LAB_THREADS, if set, and applies it.
void configure_from_env();

template <class Fn>
void for_each_index(std::size_t n, Fn&& fn) {
  std::exception_ptr first_error;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(max_threads())
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(orlicz_lab_first_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

template <class Fn>
void for_each_index_serial(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// Pairwise (cascade) summation with a fixed split order.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <class Fn>
std::vector<double> map_indexed(std::size_t n, Fn&& fn) {
  std::vector<double> out(n);
  for_each_index(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

/// sum_i w[i] * term(i), terms evaluated concurrently.
template <class Fn>
double weighted_sum(std::span<const double> w, Fn&& term) {
  std::vector<double> buf(w.size());
  for_each_index(w.size(), [&](std::size_t i) { buf[i] = w[i] * term(i); });
  return pairwise_sum(buf);
}

template <class Fn>
double weighted_sum_serial(std::span<const double> w, Fn&& term) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * term(i);
  return s;
}

}  // namespace orlicz_lab::parallel
