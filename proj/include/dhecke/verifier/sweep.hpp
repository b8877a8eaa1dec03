#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dhecke/verifier/report.hpp"

namespace dhecke {

enum class ReportFormat { json, csv };

struct SweepConfig {
  std::vector<FieldDescriptor> fields;
  /// Every ideal of norm <= this bound is a modulus.
  std::uint64_t modulus_norm_bound = 1;
  std::vector<u64> primes;
  std::size_t budget = 50;
  ReportFormat format = ReportFormat::json;
  std::uint64_t residue_cap = 100000;
  PrincipalSearchConfig search;

  /// Throws ValidationError unless the primes are distinct primes and the
  /// bounds are positive.
  void validate() const;
};

struct SweepFailure {
  std::string field;
  std::string modulus;
  std::int64_t modulus_norm = 0;
  /// 0 when the failure happened before any p was reached.
  u64 p = 0;
  std::string check;
  std::string detail;
  /// Budget or cap shortfall rather than a failed check.
  bool shortfall = false;
};

struct SweepResult {
  std::vector<ConfigReport> reports;
  std::vector<SweepFailure> failures;

  /// 0 when everything passed, 1 when a check failed, otherwise 2 when only
  /// budgets or caps fell short.
  int exit_code() const;
};

/// Runs every (field, 𝔑, p) with gcd(N(𝔑), p) = 1 and checks each report.
/// Levels are computed in parallel; the output order is fields as given,
/// moduli by (norm, HNF), then primes as given.
SweepResult run_verify(const SweepConfig& cfg);

/// Aggregated report: summary, per-configuration reports, failures.
std::string sweep_json(const SweepResult& result);

/// Ideals of norm exactly `norm`, ordered by HNF.
std::vector<IdealHNF> moduli_of_norm(const NumberField& F, std::uint64_t norm);

}  // namespace dhecke
