#ifndef NQS_PARALLEL_HPP
#define NQS_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nqs {

// Execution policy for the data-parallel kernels. Every parallel kernel has a
// serial twin used as a reference in tests and benchmarks.
enum class Exec { kSerial, kParallel };

namespace par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Number of chunks used by deterministic reductions. Fixed (independent of
// the thread count) so that results are bitwise identical across runs and
// thread settings: chunk partials are combined serially in index order.
inline constexpr std::int64_t kReduceChunks = 64;

namespace detail {

// Exceptions must not escape an OpenMP region; the first one thrown is
// captured and rethrown on the calling thread.
class ExceptionGate {
 public:
  template <class Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
      const std::lock_guard<std::mutex> lock(mutex_);
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr first_;
};

}  // namespace detail

// Deterministic map-reduce over [0, n). partial(begin, end) returns the
// serially accumulated value of one chunk; chunk results are combined in
// fixed order with combine(acc, chunk_value).
template <class T, class Partial, class Combine>
T reduce_chunked(std::int64_t n, T init, Partial&& partial, Combine&& combine,
                 Exec exec = Exec::kParallel) {
  if (n <= 0) return init;
  const std::int64_t chunks = n < kReduceChunks ? n : kReduceChunks;
  std::vector<T> partials(static_cast<std::size_t>(chunks), init);
  if (exec == Exec::kParallel) {
    detail::ExceptionGate gate;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t c = 0; c < chunks; ++c) {
      gate.run([&] {
        const std::int64_t begin = c * n / chunks;
        const std::int64_t end = (c + 1) * n / chunks;
        partials[static_cast<std::size_t>(c)] = partial(begin, end);
      });
    }
    gate.rethrow();
  } else {
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t begin = c * n / chunks;
      const std::int64_t end = (c + 1) * n / chunks;
      partials[static_cast<std::size_t>(c)] = partial(begin, end);
    }
  }
  T acc = init;
  for (const T& p : partials) acc = combine(acc, p);
  return acc;
}

// Parallel loop over [0, n) with independent iterations (disjoint writes).
template <class Fn>
void for_each_index(std::int64_t n, Fn&& fn, Exec exec = Exec::kParallel) {
  if (exec == Exec::kParallel) {
    detail::ExceptionGate gate;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      gate.run([&] { fn(i); });
    }
    gate.rethrow();
  } else {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
  }
}

}  // namespace par
}  // namespace nqs

#endif  // NQS_PARALLEL_HPP
