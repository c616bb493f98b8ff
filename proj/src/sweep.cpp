#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fibcong/verify.hpp"

namespace fibcong::verify {

namespace {

struct Task {
  bool is_prime_task;
  std::int64_t param;
  // prime tasks run all prime ids at the prime; index tasks hold one id
  CheckId index_id = CheckId::L22;
};

}  // namespace

SweepReport sweep(const std::vector<CheckId>& ids, std::int64_t lo,
                  std::int64_t hi, unsigned workers) {
  if (ids.empty()) throw std::invalid_argument("sweep: empty check set");
  if (lo > hi) throw std::invalid_argument("sweep: lo > hi");
  if (workers < 1) throw std::invalid_argument("sweep: workers >= 1 required");

  std::vector<CheckId> prime_ids, index_ids;
  for (CheckId id : ids) {
    switch (param_kind(id)) {
      case ParamKind::Prime:
        prime_ids.push_back(id);
        break;
      case ParamKind::Index:
        index_ids.push_back(id);
        break;
      default:
        throw std::invalid_argument(
            std::string("sweep: ") + std::string(to_string(id)) +
            " takes explicit parameters and cannot be range-swept");
    }
  }

  auto started = std::chrono::steady_clock::now();

  std::vector<Task> tasks;
  if (!prime_ids.empty() && hi >= 2) {
    for (std::uint64_t p :
         modmath::primes_in(static_cast<std::uint64_t>(std::max<std::int64_t>(lo, 2)),
                            static_cast<std::uint64_t>(hi))) {
      tasks.push_back(Task{true, static_cast<std::int64_t>(p)});
    }
  }
  for (CheckId id : index_ids) {
    std::int64_t min_n = id == CheckId::L22 ? 0 : 1;
    for (std::int64_t n = std::max(lo, min_n); n <= hi; ++n) {
      tasks.push_back(Task{false, n, id});
    }
  }

  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        const Task& t = tasks[i];
        if (t.is_prime_task) {
          slots[i] = run_prime_checks(prime_ids,
                                      static_cast<std::uint64_t>(t.param));
        } else {
          slots[i].push_back(
              run_check(t.index_id, Param{t.param, 0}));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  unsigned n_threads = std::min<std::size_t>(workers, std::max<std::size_t>(tasks.size(), 1));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.ids = ids;
  report.lo = lo;
  report.hi = hi;
  for (auto& slot : slots) {
    for (auto& r : slot) report.results.push_back(std::move(r));
  }

  // Failures first; within each group order by parameter, then id.
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     bool fa = a.status == Status::Fail;
                     bool fb = b.status == Status::Fail;
                     if (fa != fb) return fa;
                     if (a.param != b.param) return a.param < b.param;
                     return static_cast<int>(a.id) < static_cast<int>(b.id);
                   });

  for (const auto& r : report.results) {
    switch (r.status) {
      case Status::Pass: ++report.pass; break;
      case Status::Fail: ++report.fail; break;
      case Status::Skip: ++report.skip; break;
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

}  // namespace fibcong::verify
