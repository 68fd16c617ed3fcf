#include "diagred/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace diagred {

namespace {
std::atomic<int> g_jobs{1};
}

void Report::absorb(const Report& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  checks += other.checks;
}

void set_worker_count(int jobs) { g_jobs = std::max(1, jobs); }
int worker_count() { return g_jobs; }

Report run_indexed(std::size_t count, const std::function<void(std::size_t, Report&)>& body) {
  std::vector<Report> parts(count);
  const int jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, parts[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next++;
          if (i >= count) return;
          try {
            body(i, parts[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  Report merged;
  for (const auto& p : parts) merged.absorb(p);
  return merged;
}

}  // namespace diagred
