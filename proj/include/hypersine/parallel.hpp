#pragma once

/**
 * Max-reduction sweeps over sample sets.
 *
 * Every verification check is a maximum of independent per-sample residuals.
 * sweep_max_serial is the reference; sweep_max_parallel splits the index
 * range over OpenMP threads and merges with the same tie-breaking rule
 * (largest residual, then lowest index), so both produce identical results.
 */

#include <cmath>
#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypersine {

enum class Execution { serial, parallel };

/// Absolute and relative residual of one sample.
struct SampleResidual {
  double abs = 0.0;
  double rel = 0.0;
};

struct SweepResult {
  double max_abs = 0.0;
  double max_rel = 0.0;
  std::size_t witness = 0;  // index of the sample attaining max_abs
  std::size_t samples = 0;
};

namespace detail {

// NaN residuals must win the max so that a broken function cannot pass.
inline bool worse(double candidate, double incumbent) {
  if (std::isnan(candidate)) return !std::isnan(incumbent);
  return candidate > incumbent;
}

inline void absorb(SweepResult& acc, std::size_t i, const SampleResidual& r) {
  if (acc.samples == 0 || worse(r.abs, acc.max_abs) || (r.abs == acc.max_abs && i < acc.witness)) {
    acc.max_abs = r.abs;
    acc.witness = i;
  }
  if (acc.samples == 0 || worse(r.rel, acc.max_rel)) acc.max_rel = r.rel;
  ++acc.samples;
}

inline void merge(SweepResult& acc, const SweepResult& part) {
  if (part.samples == 0) return;
  if (acc.samples == 0) {
    acc = part;
    return;
  }
  if (worse(part.max_abs, acc.max_abs) || (part.max_abs == acc.max_abs && part.witness < acc.witness)) {
    acc.max_abs = part.max_abs;
    acc.witness = part.witness;
  }
  if (worse(part.max_rel, acc.max_rel)) acc.max_rel = part.max_rel;
  acc.samples += part.samples;
}

}  // namespace detail

template <typename Fn>
SweepResult sweep_max_serial(std::size_t count, Fn&& residual_at) {
  SweepResult acc;
  for (std::size_t i = 0; i < count; ++i) detail::absorb(acc, i, residual_at(i));
  return acc;
}

template <typename Fn>
SweepResult sweep_max_parallel(std::size_t count, Fn&& residual_at) {
#ifdef _OPENMP
  SweepResult acc;
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel
  {
    SweepResult local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        detail::absorb(local, static_cast<std::size_t>(i), residual_at(static_cast<std::size_t>(i)));
      } catch (...) {
#pragma omp critical(hypersine_sweep_error)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(hypersine_sweep_merge)
    detail::merge(acc, local);
  }
  if (failure) std::rethrow_exception(failure);
  return acc;
#else
  return sweep_max_serial(count, std::forward<Fn>(residual_at));
#endif
}

template <typename Fn>
SweepResult sweep_max(std::size_t count, Fn&& residual_at, Execution exec = Execution::parallel) {
  return exec == Execution::parallel ? sweep_max_parallel(count, std::forward<Fn>(residual_at))
                                     : sweep_max_serial(count, std::forward<Fn>(residual_at));
}

}  // namespace hypersine
