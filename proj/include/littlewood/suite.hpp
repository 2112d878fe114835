#pragma once

// The verification suite: one named, timed run per acceptance criterion,
// shared by the command-line `suite` command and the acceptance test.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/bounds.hpp"
#include "littlewood/io.hpp"
#include "littlewood/quadrature.hpp"

namespace littlewood {

struct SuiteConfig {
  double rel_err = 0.05;
  double c_mps = kDefaultCMps;
  std::uint64_t seed = 1;
  QuadratureOptions quadrature = QuadratureOptions::from_environment();
  /// Negative control: perturbs one value of every flat-top kernel.
  bool corrupt_kernel = false;
  /// Criteria to run (1..11); empty runs all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  /// Numeric evidence; deterministic for a fixed config.
  Json details;
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
  /// Minimum certified ratio from the harmonic-weighted scan, when run.
  std::optional<double> empirical_c_mps;
};

/// Number of criteria, 11.
int criterion_count();
std::string criterion_name(int id);

struct SuiteState {
  std::optional<double> empirical_c_mps;
  /// Numeric details of criteria 1..10, compared by the determinism criterion.
  Json reference = Json::object();
};

/// Runs one criterion. Criterion 10 uses state.empirical_c_mps, computing it
/// first when criterion 8 has not run; criterion 11 reruns criteria 1..10 and
/// compares their details with state.reference (filled when absent).
CriterionResult run_criterion(int id, const SuiteConfig& config, SuiteState& state);

SuiteReport run_suite(const SuiteConfig& config);

Json to_json(const SuiteConfig& config);
Json to_json(const CriterionResult& result);
/// Config echo, per-criterion results and totals. Wall times live under
/// "timing" keys so that reports differ only there between identical runs.
Json to_json(const SuiteReport& report, const SuiteConfig& config);

}  // namespace littlewood
