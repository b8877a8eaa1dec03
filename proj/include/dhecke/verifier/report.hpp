#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhecke/hecke/reports.hpp"
#include "dhecke/verifier/descriptor.hpp"

namespace dhecke {

/// One (field, 𝔑, p) configuration. Field order matches the JSON report.
struct ConfigReport {
  std::string field;
  /// HNF of 𝔑; not part of the rendered row, used to pinpoint failures.
  std::string modulus;
  std::int64_t modulus_norm = 0;
  u64 p = 0;
  int r = 0;
  int r_p = 0;
  int delta_p = 0;
  int t_p = 0;
  std::int64_t h_plus = 0;
  std::int64_t index = 0;
  bool hypothesis_A = false;
  std::int64_t dim_H0 = 0;
  std::int64_t dim_H1 = 0;
  std::int64_t dim_psi_domain = 0;
  std::int64_t dim_psi_image = 0;
  bool psi_isomorphism = false;
  /// Rational primes under the certificate primes, in scan order.
  std::vector<u64> certificate_primes;
  std::size_t eigensystem_count = 0;
  bool eigensystems_matched = false;
  /// The T₁ budget ran out below r_p - δ_p.
  bool shortfall = false;
};

/// Computes every quantity of the report for one p on a prepared level.
ConfigReport run_invariants(const Level& L, u64 p, std::size_t budget = 50);

enum class CheckKind { budget, tp_identity, dimensions, isomorphism_pattern, eigensystem_matching };

const char* check_name(CheckKind k);

struct CheckFailure {
  CheckKind kind;
  std::string detail;
};

/// The executable checks: t_p = r_p - δ_p; dim H⁰ = h⁺, dim H¹ = h⁺·r and
/// both Ψ dimensions equal h⁺·t_p; Ψ is an isomorphism exactly when
/// t_p = r, which must happen whenever p ∤ index; eigensystems match in both
/// degrees whenever the hypothesis holds and t_p > 0. A shortfall is
/// reported on its own and suppresses the checks that depend on t_p.
std::vector<CheckFailure> check_report(const ConfigReport& rep);

/// Report as a JSON object, keys in the documented order.
nlohmann::ordered_json report_to_json(const ConfigReport& rep);
std::string report_json(const ConfigReport& rep);

inline constexpr const char* kCsvHeader =
    "field,modulus_norm,p,r,r_p,delta_p,t_p,h_plus,index,hypothesis_A,psi_isomorphism,eigensystems_matched";

/// Header plus one row per report.
std::string reports_csv(const std::vector<ConfigReport>& reports);

}  // namespace dhecke
