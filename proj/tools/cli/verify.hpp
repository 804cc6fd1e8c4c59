#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vknot::cli {

struct SuiteOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::size_t max_chords = 8;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::map<std::string, std::size_t> coverage;
  /// Up to kMaxReports descriptions; walk-based suites include the transcript.
  std::vector<std::string> reports;
};

inline constexpr std::size_t kMaxReports = 5;

/// invariance, symmetry, additivity, finite-type, delta, welded, formula.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace vknot::cli
