#pragma once

#include <string>
#include <vector>

namespace minrec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string details = "") {
    checks.push_back({std::move(name), pass, std::move(details)});
  }
};

}  // namespace minrec
