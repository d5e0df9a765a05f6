#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bisplit/oracle/field.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit::tool {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  Bidegree bounds{6, 6};  // rows x columns of the sampled point parts
  oracle::PrimeField field;
};

/// Functions under test. Tests swap in broken versions to make sure the
/// campaign notices.
struct Hooks {
  std::function<Arrangement(const Arrangement&, const Arrangement&)> intersect =
      [](const Arrangement& a, const Arrangement& b) { return bisplit::intersect(a, b); };
};

struct Failure {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  std::string message;
  nlohmann::json counterexample;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  double seconds = 0;
  std::optional<Failure> failure;
  bool passed() const noexcept { return !failure; }
};

struct CampaignReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Each trial draws from its own generator seeded by (seed, suite, trial),
/// so a failure reproduces from the three numbers alone. A suite stops at
/// its first failure.
CampaignReport run_campaign(const VerifyOptions& opts, const Hooks& hooks = {});

/// Timings are left out so the document is byte-stable.
nlohmann::json to_json(const CampaignReport& r);

std::uint64_t trial_seed(std::uint64_t seed, std::size_t suite, int trial);

}  // namespace bisplit::tool
