#ifndef ZWDIAG_PARALLEL_HPP
#define ZWDIAG_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zwdiag::detail {

inline unsigned resolve_jobs(unsigned jobs)
{
  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

/// Splits [0, count) into `chunks` contiguous ranges and runs
/// body(chunk, begin, end) for each on up to `jobs` threads. Chunk boundaries
/// depend only on `count` and `chunks`, never on `jobs`.
template <typename Body>
void parallel_chunks(std::size_t count, std::size_t chunks, unsigned jobs, Body &&body)
{
  chunks = std::max<std::size_t>(1, std::min(chunks, count));
  auto const bounds = [&](std::size_t c) { return count * c / chunks; };
  jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), chunks));
  if (jobs <= 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      body(c, bounds(c), bounds(c + 1));
    return;
  }

  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < chunks; c += jobs)
          body(c, bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    });
  workers.clear();
  if (error)
    std::rethrow_exception(error);
}

} // namespace zwdiag::detail

#endif
