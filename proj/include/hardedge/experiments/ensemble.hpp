#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

#include <omp.h>

#include "hardedge/core/errors.hpp"

namespace hardedge {

/// Worker count for ensembles and statistics; n <= 0 restores the runtime default.
inline void set_thread_count(int n) {
  static const int initial = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : initial);
}

inline int thread_count() { return omp_get_max_threads(); }

/// Evaluates f(r) for every replica r in [0, n). A replica that throws a
/// library Error yields an empty slot; any other exception is rethrown after
/// the loop (lowest replica first). Slot r depends only on r, so the output
/// is independent of scheduling.
template <class T, class F>
std::vector<std::optional<T>> run_replicas(std::size_t n, F&& f, bool parallel = true) {
  std::vector<std::optional<T>> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto body = [&](std::size_t r) {
    try {
      out[r] = f(r);
    } catch (const Error&) {
      out[r].reset();
    } catch (...) {
      errors[r] = std::current_exception();
    }
  };
  if (parallel) {
    const auto ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long r = 0; r < ln; ++r) body(static_cast<std::size_t>(r));
  } else {
    for (std::size_t r = 0; r < n; ++r) body(r);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Keeps the filled slots in replica order; `failed` receives the number of
/// empty ones.
template <class T>
std::vector<T> collect(std::vector<std::optional<T>>&& slots, std::size_t& failed) {
  std::vector<T> kept;
  kept.reserve(slots.size());
  failed = 0;
  for (auto& s : slots) {
    if (s)
      kept.push_back(std::move(*s));
    else
      ++failed;
  }
  return kept;
}

}  // namespace hardedge
