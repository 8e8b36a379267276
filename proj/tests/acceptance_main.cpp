// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run directly or through ctest.

#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>

#include "minrec/suites.hpp"

int main(int argc, char** argv) {
  minrec::SuiteOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
      options.threads = std::stoi(argv[++i]);
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      options.seed = std::stoull(argv[++i]);
    else if (std::strcmp(argv[i], "--budget") == 0 && i + 1 < argc)
      options.budget = std::stoull(argv[++i]);
  }

  auto reports = minrec::run_acceptance(options);
  bool all_passed = true;
  int index = 0;
  for (const auto& report : reports) {
    ++index;
    bool passed = report.passed();
    all_passed = all_passed && passed;
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << index << ". "
              << report.suite << "  (" << std::fixed << std::setprecision(2)
              << report.elapsed_seconds << " s)\n";
    if (!passed)
      for (const auto& check : report.checks)
        if (!check.pass)
          std::cout << "         failed: " << check.name
                    << (check.details.empty() ? "" : "  (" + check.details + ")") << '\n';
  }
  std::cout << (all_passed ? "acceptance: PASS" : "acceptance: FAIL") << '\n';
  return all_passed ? 0 : 1;
}
