#ifndef FFSTAT_PARALLEL_HPP
#define FFSTAT_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ffstat {

/// Worker count: explicit request, else FFSTAT_THREADS, else the machine's
/// hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("FFSTAT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous chunks, one per worker.  Each worker folds
/// its chunk into a copy of init via body(begin, end, acc); partial results
/// are merged in chunk order.  Callers keep merge commutative and
/// associative, so the result does not depend on the worker count.
template <class Acc, class Body, class Merge>
Acc parallel_reduce(std::uint64_t n, unsigned threads, const Acc& init, Body body, Merge merge) {
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n)));
  if (threads <= 1) {
    Acc acc = init;
    if (n) body(std::uint64_t{0}, n, acc);
    return acc;
  }
  std::vector<Acc> partial(threads, init);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = n * w / threads, end = n * (w + 1) / threads;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc acc = init;
  for (auto& part : partial) merge(acc, std::move(part));
  return acc;
}

}  // namespace ffstat

#endif  // FFSTAT_PARALLEL_HPP
