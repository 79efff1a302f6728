#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace apu {

/// Serializable record of one audit/scan run. Exact values are carried as
/// decimal or "num/den" strings, never as floats; floating-point convenience
/// values live under `bounds` with an explicit "~" prefix on the key.
/// Serialization is canonical: same inputs and seed give identical bytes.
/// Wall-clock is opt-in so that it never breaks reproducibility.
struct ExperimentReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> counts;
  std::vector<std::pair<std::string, std::string>> bounds;

  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  std::optional<double> wall_ms;

  void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
  void count(const std::string& k, const std::string& v) { counts.emplace_back(k, v); }
  void bound(const std::string& k, const std::string& v) { bounds.emplace_back(k, v); }
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }

  bool all_pass() const;
  std::size_t failed_checks() const;

  std::string to_json() const;
  std::string to_csv() const;

  /// Writes in the requested format ("json" or "csv").
  void write_file(const std::string& path, const std::string& format) const;

  static ExperimentReport from_json(const std::string& text);
};

}  // namespace apu
