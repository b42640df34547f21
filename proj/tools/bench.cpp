// Compares the serial reference execution of the verification suites with
// the worker-pool execution: identical reports required, wall times printed.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "yhdn/suites.hpp"

namespace {

long long run_ms(const std::string& suite, int d, int n, yhdn::ExecMode mode,
                 std::string* out) {
  const auto t0 = std::chrono::steady_clock::now();
  *out = yhdn::run_suite(suite, d, n, mode).str();
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  struct Row {
    std::string suite;
    int d, n;
  };
  const std::vector<Row> rows = {{"relations", 2, 3},
                                 {"branching", 2, 3},
                                 {"trace-form", 2, 2},
                                 {"tau-decomposition", 2, 3},
                                 {"jm-commute", 2, 3},
                                 {"idempotents", 2, 3}};
  std::printf("%-18s %3s %3s %10s %10s %8s\n", "suite", "d", "n", "serial", "parallel",
              "match");
  bool ok = true;
  for (const Row& row : rows) {
    std::string serial_report, parallel_report;
    const long long ts = run_ms(row.suite, row.d, row.n, yhdn::ExecMode::serial,
                                &serial_report);
    const long long tp = run_ms(row.suite, row.d, row.n, yhdn::ExecMode::parallel,
                                &parallel_report);
    const bool match = serial_report == parallel_report;
    ok = ok && match;
    std::printf("%-18s %3d %3d %8lldms %8lldms %8s\n", row.suite.c_str(), row.d, row.n,
                ts, tp, match ? "yes" : "NO");
  }
  return ok ? 0 : 1;
}
