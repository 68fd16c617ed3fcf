// Failure reports shared by all verification suites, plus a small helper
// for running independent checks on several threads.
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace diagred {

struct Failure {
  std::string identity;
  std::vector<int> indices;  // 1-based, as printed
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string suite;
  std::vector<Failure> failures;
  /// Informational lines (recorded observations that are not assertions).
  std::vector<std::string> notes;
  std::size_t checks = 0;

  bool passed() const { return failures.empty(); }
  void fail(std::string identity, std::vector<int> indices, std::string lhs, std::string rhs) {
    failures.push_back({std::move(identity), std::move(indices), std::move(lhs), std::move(rhs)});
  }
  void absorb(const Report& other);
};

/// Number of worker threads used by the verification suites (default 1).
void set_worker_count(int jobs);
int worker_count();

/// Runs body(i, report) for i in [0, count) on worker_count() threads and
/// merges the per-index reports in index order, so output does not depend
/// on scheduling.
Report run_indexed(std::size_t count, const std::function<void(std::size_t, Report&)>& body);

}  // namespace diagred
