#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dhecke/kernel/modular.hpp"
#include "dhecke/number_field/field.hpp"

namespace dhecke {

/// Evidence that min_poly is irreducible over Q. Either it stays
/// irreducible mod one prime, or the degree patterns mod several primes
/// leave no room for a proper factor.
struct IrreducibilityCertificate {
  enum class Kind { irreducible_mod_prime, factor_degrees };
  Kind kind = Kind::irreducible_mod_prime;
  std::vector<u64> primes;
};

struct ValidatedDescriptor {
  FieldDescriptor descriptor;
  Integer discriminant;
  IrreducibilityCertificate certificate;
  /// Disagreements with native data that do not make the input invalid.
  std::vector<std::string> warnings;
};

/// Parses the descriptor JSON. Integers may be JSON numbers or decimal
/// strings. Throws ParseError on malformed input or missing fields.
FieldDescriptor parse_field_descriptor(const std::string& text);

/// Checks, in this order: monic, degree, signature arithmetic, square-free,
/// irreducibility certificate, real roots, torsion order, unit count and
/// norms, class number. Throws ValidationError naming the first failure.
ValidatedDescriptor validate_descriptor(FieldDescriptor fd);

/// Reads, parses and validates a descriptor file.
ValidatedDescriptor load_field_descriptor(const std::filesystem::path& path);

/// Searches primes below `bound` not dividing the discriminant.
/// Returns nothing when no certificate is found.
std::optional<IrreducibilityCertificate> irreducibility_certificate(const std::vector<Integer>& poly,
                                                                    const Integer& disc, u64 bound = 2000);

/// Squarefree d with Z[θ] equal to the native order of Q(√d) for this
/// polynomial, if it is one of x² - d or x² - x - (d-1)/4.
std::optional<std::int64_t> native_quadratic_parameter(const std::vector<Integer>& poly);

/// Native descriptor for Q(√d), validated (no warnings by construction).
ValidatedDescriptor native_real_quadratic(std::int64_t d);

}  // namespace dhecke
