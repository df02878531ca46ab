#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace primeterm {

// Every data-parallel kernel in the library exists in two forms: a serial
// reference and an OpenMP version. The serial form is the semantic ground
// truth; tests assert the parallel form matches it and `primeterm bench`
// compares their throughput.
enum class ExecPolicy { Serial, Parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Chunked map-reduce over [0, n). Each chunk produces a partial via
// fold(acc, i); partials are combined left-to-right in chunk order, so the
// result is schedule-independent whenever combine is associative.
template <typename T, typename Fold, typename Combine>
T chunked_reduce(std::uint64_t n, T init, Fold&& fold, Combine&& combine,
                 ExecPolicy policy) {
  if (n == 0) return init;
  std::uint64_t chunks = 1;
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
    chunks = static_cast<std::uint64_t>(hardware_threads()) * 4;
    if (chunks > n) chunks = n;
  }
#else
  (void)policy;
#endif
  std::vector<T> partial(chunks, init);
  const std::uint64_t step = (n + chunks - 1) / chunks;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * step;
    const std::uint64_t hi = lo + step < n ? lo + step : n;
    T acc = init;
    for (std::uint64_t i = lo; i < hi; ++i) acc = fold(std::move(acc), i);
    partial[static_cast<std::size_t>(c)] = std::move(acc);
  }
  T out = init;
  for (auto& p : partial) out = combine(std::move(out), std::move(p));
  return out;
}

}  // namespace primeterm
