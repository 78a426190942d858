#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hypcert/io.hpp"

namespace hypcert {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureResult {
  std::string id;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0;
  /// Set when the fixture could not run at all (missing file, parse error).
  std::string error;

  bool passed() const;
};

/// Directory holding F1..F6; $HYPCERT_FIXTURES overrides the built-in path.
std::filesystem::path default_fixture_dir();

std::vector<std::string> fixture_ids();

/// Runs one fixture. Sampling fixtures take their seed and sample count from
/// fixture.json unless `sampling` overrides are given.
FixtureResult run_fixture(const std::string& id, const std::filesystem::path& dir,
                          const std::optional<SamplingOptions>& sampling = std::nullopt);

/// Runs all fixtures whose id equals `filter` (all when empty), ordered by id.
std::vector<FixtureResult> run_fixtures(const std::string& filter, const std::filesystem::path& dir,
                                        const std::optional<SamplingOptions>& sampling = std::nullopt);

/// Byte-stable for fixed seeds: timings are left out.
Json fixture_results_to_json(const std::vector<FixtureResult>& results);

}  // namespace hypcert
