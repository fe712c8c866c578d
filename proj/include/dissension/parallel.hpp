#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace dissension {

/// 0 or negative selects the OpenMP default team size.
inline int resolve_workers(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

/// Serial reference: out[i] = f(i) in index order.
template <class F>
std::vector<double> tabulate_serial(std::size_t count, F&& f) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

/// OpenMP version of tabulate_serial. Each slot is written by exactly one thread,
/// so the result is bit-identical to the serial one for any worker count. If any
/// evaluation throws, the exception of the lowest failing index is rethrown.
template <class F>
std::vector<double> tabulate(std::size_t count, F&& f, int workers) {
  const int threads = resolve_workers(workers);
  if (threads == 1 || count < 2) return tabulate_serial(count, f);

  std::vector<double> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace dissension
