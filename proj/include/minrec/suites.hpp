#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minrec/report.hpp"

namespace minrec {

struct SuiteOptions {
  std::uint64_t seed = 12345;
  std::uint64_t budget = 1ull << 28;
  int threads = 1;
};

/// Suite ids accepted by run_suite.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& id, const SuiteOptions& options = {});

/// The ten acceptance suites in criterion order.
std::vector<SuiteReport> run_acceptance(const SuiteOptions& options = {});

}  // namespace minrec
