#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectra/limits.hpp"

namespace spectra {

struct VerifyFailure {
  std::string instance;
  std::string violation;
  /// serialized structure that exhibits the violation
  nlohmann::json witness;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t max_order = 0;
  std::vector<VerifyFailure> failures;
  /// per-family counts and other coverage lines
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

/// lemma11, lemma31, lemma32, lemma33, malcev, multiplicativity, thm21,
/// odd22, gate32
const std::vector<std::string>& suite_names();

/// Runs one suite over catalog and enumerated instances. Sampling is driven
/// by seed only, so two runs with the same seed check the same instances.
/// Throws UnknownName for an unknown suite.
VerifyReport run_suite(const std::string& name, std::uint64_t seed = 0, const Limits& limits = {});

nlohmann::json to_json(const VerifyReport& report);

}  // namespace spectra
