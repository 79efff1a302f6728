#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "apu/report.hpp"

namespace apu {

/// Named verification suites over the library: randomized identity checks,
/// oracle comparisons and construction galleries. Each returns a full
/// ExperimentReport whose checks decide pass/fail.
struct AuditSuite {
  std::string name;
  std::string description;
  std::function<ExperimentReport(std::uint64_t seed)> run;
};

const std::vector<AuditSuite>& audit_registry();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
ExperimentReport run_audit(const std::string& suite, std::uint64_t seed);

}  // namespace apu
