#include "chiro/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chiro {

int thread_budget() {
  if (const char* env = std::getenv("CHIRO_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 256);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

int plan_chunks(std::int64_t total) {
  if (total <= 0) return 0;
  return static_cast<int>(std::min<std::int64_t>(thread_budget(), total));
}

void run_chunks(std::int64_t total, int chunks,
                const std::function<void(std::int64_t, std::int64_t, int)>& work) {
  if (total <= 0 || chunks <= 0) return;
  const std::int64_t step = (total + chunks - 1) / chunks;
  if (chunks == 1) {
    work(0, total, 0);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t begin = static_cast<std::int64_t>(c) * step;
    const std::int64_t end = std::min<std::int64_t>(total, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end, c] {
      try {
        work(begin, end, c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace chiro
