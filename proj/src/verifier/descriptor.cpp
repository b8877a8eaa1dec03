#include "dhecke/verifier/descriptor.hpp"

#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "dhecke/core/errors.hpp"
#include "dhecke/kernel/poly_fp.hpp"
#include "dhecke/ray_class/ray_class.hpp"
#include "dhecke/units/units.hpp"

namespace dhecke {

namespace {

using nlohmann::json;

// Largest d accepted for native construction (|disc| <= 4d stays near 10^6).
constexpr std::int64_t kNativeMaxD = 250000;

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Integer to_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, digits)) return Integer(s);
  }
  throw ParseError(where + ": expected an integer, got " + j.dump());
}

std::int64_t to_small(const json& j, const std::string& where) {
  const Integer v = to_integer(j, where);
  if (abs_value(v) > Integer(std::numeric_limits<std::int64_t>::max() / 2)) throw ParseError(where + ": out of range");
  return to_i64(v);
}

std::vector<Integer> to_integer_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

bool squarefree(std::int64_t d) {
  for (std::int64_t q = 2; q * q <= d; ++q) {
    if (d % (q * q) == 0) return false;
  }
  return true;
}

// Subset sums of the factor degrees that lie strictly between 0 and n.
std::vector<bool> proper_subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (int d : degrees) {
    for (int s = n; s >= d; --s) reach[s] = reach[s] || reach[s - d];
  }
  reach[0] = reach[n] = false;
  return reach;
}

}  // namespace

FieldDescriptor parse_field_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("descriptor is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
  FieldDescriptor fd;
  const json& label = field(j, "label");
  if (!label.is_string()) throw ParseError("label: expected a string");
  fd.label = label.get<std::string>();
  fd.min_poly = to_integer_list(field(j, "min_poly"), "min_poly");
  const json& sig = field(j, "signature");
  if (!sig.is_array() || sig.size() != 2) throw ParseError("signature: expected [r1, r2]");
  fd.r1 = static_cast<int>(to_small(sig[0], "signature[0]"));
  fd.r2 = static_cast<int>(to_small(sig[1], "signature[1]"));
  const json& tors = field(j, "torsion");
  if (!tors.is_object()) throw ParseError("torsion: expected an object");
  fd.torsion_order = to_small(field(tors, "order"), "torsion.order");
  fd.torsion_generator = to_integer_list(field(tors, "generator"), "torsion.generator");
  const json& units = field(j, "fundamental_units");
  if (!units.is_array()) throw ParseError("fundamental_units: expected an array");
  for (std::size_t i = 0; i < units.size(); ++i) {
    fd.fundamental_units.push_back(to_integer_list(units[i], "fundamental_units[" + std::to_string(i) + "]"));
  }
  fd.class_number = to_small(field(j, "class_number"), "class_number");
  fd.provenance = Provenance::ingested;
  return fd;
}

std::optional<IrreducibilityCertificate> irreducibility_certificate(const std::vector<Integer>& poly,
                                                                    const Integer& disc, u64 bound) {
  const int n = static_cast<int>(poly.size()) - 1;
  std::vector<bool> possible(n + 1, true);
  possible[0] = possible[n] = false;
  IrreducibilityCertificate cert;
  cert.kind = IrreducibilityCertificate::Kind::factor_degrees;
  for (u64 ell = 2; ell < bound; ell = next_prime(ell)) {
    if (disc % ell == 0) continue;
    std::vector<int> degrees;
    for (const auto& [g, m] : factor_poly_mod_ell(poly, ell)) {
      for (unsigned k = 0; k < m; ++k) degrees.push_back(g.degree());
    }
    if (degrees.size() == 1) return IrreducibilityCertificate{IrreducibilityCertificate::Kind::irreducible_mod_prime, {ell}};
    const auto sums = proper_subset_sums(degrees, n);
    bool narrowed = false, any = false;
    for (int s = 1; s < n; ++s) {
      if (possible[s] && !sums[s]) {
        possible[s] = false;
        narrowed = true;
      }
      any = any || possible[s];
    }
    if (narrowed) cert.primes.push_back(ell);
    if (!any) return cert;
  }
  return std::nullopt;
}

std::optional<std::int64_t> native_quadratic_parameter(const std::vector<Integer>& poly) {
  if (poly.size() != 3 || poly[2] != 1) return std::nullopt;
  Integer d;
  if (poly[1] == 0) {
    d = -poly[0];
    if (d % 4 == 1) return std::nullopt;
  } else if (poly[1] == -1) {
    d = 1 - 4 * poly[0];
  } else {
    return std::nullopt;
  }
  if (d < 2 || d > kNativeMaxD || !squarefree(to_i64(d))) return std::nullopt;
  return to_i64(d);
}

ValidatedDescriptor validate_descriptor(FieldDescriptor fd) {
  const auto& f = fd.min_poly;
  if (f.empty() || f.back() != 1) throw ValidationError("min_poly: polynomial is not monic");
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 2) throw ValidationError("min_poly: degree must be at least 2");
  if (fd.r1 < 0 || fd.r2 < 0 || fd.r1 + 2 * fd.r2 != n) {
    throw ValidationError("signature: r1 + 2 r2 does not equal the degree");
  }
  ValidatedDescriptor out;
  out.discriminant = poly_discriminant(f);
  if (out.discriminant == 0) throw ValidationError("min_poly: polynomial is not square-free");
  auto cert = irreducibility_certificate(f, out.discriminant);
  if (!cert) throw ValidationError("min_poly: no irreducibility certificate among primes below 2000");
  out.certificate = std::move(*cert);

  const NumberField F(fd);
  const UnitGroup U = unit_group(F);
  if (fd.class_number < 1) throw ValidationError("class_number must be positive");

  if (const auto d = native_quadratic_parameter(f); d && fd.r1 == 2) {
    const Element eps = fundamental_unit_real_quadratic(*d);
    const Element inv = F.unit_inverse(eps);
    const Element& u = U.fundamental[0];
    if (u != eps && u != inv && u != Element(-eps) && u != Element(-inv)) {
      out.warnings.push_back("fundamental unit " + element_to_string(u) + " is not +-e^(+-1) for the native e = " +
                             element_to_string(eps));
    }
    FieldDescriptor native = fd;
    native.provenance = Provenance::native;
    const std::int64_t h = class_number_real_quadratic(NumberField(native));
    if (h != fd.class_number) {
      out.warnings.push_back("class_number " + std::to_string(fd.class_number) + " differs from the native value " +
                             std::to_string(h));
    }
  }
  out.descriptor = std::move(fd);
  return out;
}

ValidatedDescriptor load_field_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read descriptor file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate_descriptor(parse_field_descriptor(buf.str()));
}

ValidatedDescriptor native_real_quadratic(std::int64_t d) {
  if (d < 2 || d > kNativeMaxD || !squarefree(d)) {
    throw ValidationError("--d " + std::to_string(d) + ": expected a squarefree integer in [2, " +
                          std::to_string(kNativeMaxD) + "]");
  }
  FieldDescriptor fd = real_quadratic_descriptor(d);
  ValidatedDescriptor out;
  out.discriminant = poly_discriminant(fd.min_poly);
  auto cert = irreducibility_certificate(fd.min_poly, out.discriminant);
  if (!cert) throw std::logic_error("native quadratic polynomial without irreducibility certificate");
  out.certificate = std::move(*cert);
  out.descriptor = std::move(fd);
  return out;
}

}  // namespace dhecke
