#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wreathlab {

struct VerifyDepth {
  /// 0 means exhaustive; otherwise the number of random samples per case.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  /// "exhaustive" or "sampled:n". Throws ParseError.
  static VerifyDepth parse(const std::string& text, std::uint64_t seed = 0);
};

struct PropertyResult {
  std::string suite;
  std::string property;
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;
};

/// Suite names accepted by run_suites, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs "all" or one named suite. The "group" suite only runs when a group
/// file is given; that group is then also fed to the kk suite.
/// Results are sorted by suite, then property.
std::vector<PropertyResult> run_suites(const std::string& suite, const VerifyDepth& depth,
                                       const std::optional<std::filesystem::path>& group_file = std::nullopt);

/// Individual suites.
std::vector<PropertyResult> verify_theta(const VerifyDepth& depth, std::uint64_t max_size = 10'000);
std::vector<PropertyResult> verify_kk(const VerifyDepth& depth,
                                      const std::optional<std::filesystem::path>& group_file = std::nullopt);
std::vector<PropertyResult> verify_omega(const VerifyDepth& depth);
std::vector<PropertyResult> verify_cocycles();
std::vector<PropertyResult> verify_iso(const VerifyDepth& depth);
std::vector<PropertyResult> verify_group_file(const std::filesystem::path& path);

/// {"passed": bool, "results": [{"suite", "property", "passed", "checked",
/// "counterexample"}...]}
nlohmann::ordered_json results_to_json(const std::vector<PropertyResult>& results);
bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace wreathlab
