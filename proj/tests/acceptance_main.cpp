// Runs every acceptance suite with the default seed and prints one line each.

#include <cstdio>
#include <iostream>

#include "arithtrace/acceptance.hpp"

int main() {
  namespace s = arithtrace::suites;
  int failed = 0;
  double total = 0;
  for (const auto& suite : s::all_suites()) {
    auto r = s::run_suite(suite, s::kDefaultSeed);
    total += r.seconds;
    if (!r.passed) ++failed;
    std::printf("[%s] %2d %-22s %7.2fs / %3.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.limit_seconds, r.detail.c_str());
  }
  bool total_ok = total <= s::kTotalLimitSeconds;
  if (!total_ok) ++failed;
  std::printf("[%s] total %.2fs / %.0fs\n", total_ok ? "PASS" : "FAIL", total, s::kTotalLimitSeconds);
  return failed ? 1 : 0;
}
