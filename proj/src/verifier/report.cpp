#include "dhecke/verifier/report.hpp"

#include <sstream>

namespace dhecke {

ConfigReport run_invariants(const Level& L, u64 p, std::size_t budget) {
  const NumberField& F = L.field();
  const UnitImage& image = L.unit_image();
  const EUnits E = e_units(F, L.units(), L.congruence(), image, p);

  ConfigReport rep;
  rep.field = F.label();
  rep.modulus = ideal_to_string(L.modulus());
  rep.modulus_norm = to_i64(L.modulus().norm);
  rep.p = p;
  rep.r = F.unit_rank();
  rep.r_p = compute_rp(F, p);
  rep.delta_p = image.delta(p);
  rep.h_plus = static_cast<std::int64_t>(L.ray_classes().order());
  rep.index = to_i64(image.index);

  const TpResult tp = compute_tp(F, L.units(), E, L.modulus().norm, p, rep.r_p - rep.delta_p, budget);
  rep.t_p = tp.t_p;
  rep.shortfall = tp.shortfall;
  for (auto i : tp.certificate) rep.certificate_primes.push_back(tp.scanned[i].v.ell);

  const PsiReport psi = psi_report(L, E, tp, p);
  rep.hypothesis_A = psi.hypothesis_holds;
  rep.dim_H0 = psi.dim_h0;
  rep.dim_H1 = psi.dim_h1;
  rep.dim_psi_domain = psi.dim_domain;
  rep.dim_psi_image = psi.dim_image;
  rep.psi_isomorphism = psi.is_isomorphism;

  const EigenReport eig = eigensystem_report(L, E, tp, p);
  rep.eigensystem_count = eig.count;
  rep.eigensystems_matched = eig.matched_both_degrees;
  return rep;
}

const char* check_name(CheckKind k) {
  switch (k) {
    case CheckKind::budget: return "budget";
    case CheckKind::tp_identity: return "tp_identity";
    case CheckKind::dimensions: return "dimensions";
    case CheckKind::isomorphism_pattern: return "isomorphism_pattern";
    case CheckKind::eigensystem_matching: return "eigensystem_matching";
  }
  return "unknown";
}

std::vector<CheckFailure> check_report(const ConfigReport& rep) {
  std::vector<CheckFailure> out;
  auto fail = [&](CheckKind k, std::string detail) { out.push_back({k, std::move(detail)}); };
  const std::int64_t h = rep.h_plus;
  const int expected = rep.r_p - rep.delta_p;

  if (rep.dim_H0 != h) fail(CheckKind::dimensions, "dim H0 = " + std::to_string(rep.dim_H0) + ", h+ = " + std::to_string(h));
  if (rep.dim_H1 != h * rep.r) {
    fail(CheckKind::dimensions, "dim H1 = " + std::to_string(rep.dim_H1) + ", h+ r = " + std::to_string(h * rep.r));
  }
  if (rep.shortfall) {
    fail(CheckKind::budget, "t_p reached " + std::to_string(rep.t_p) + " of " + std::to_string(expected));
    return out;
  }
  if (rep.t_p != expected) {
    fail(CheckKind::tp_identity, "t_p = " + std::to_string(rep.t_p) + " but r_p - delta_p = " + std::to_string(expected));
  }
  const std::int64_t target = h * rep.t_p;
  if (rep.dim_psi_domain != target || rep.dim_psi_image != target) {
    fail(CheckKind::dimensions, "Psi dims (" + std::to_string(rep.dim_psi_domain) + ", " +
                                    std::to_string(rep.dim_psi_image) + "), h+ t_p = " + std::to_string(target));
  }
  if (rep.psi_isomorphism != (rep.t_p == rep.r)) {
    fail(CheckKind::isomorphism_pattern, std::string("Psi reported ") + (rep.psi_isomorphism ? "" : "not ") +
                                             "an isomorphism with t_p = " + std::to_string(rep.t_p) +
                                             ", r = " + std::to_string(rep.r));
  }
  if (rep.hypothesis_A && !rep.psi_isomorphism) {
    fail(CheckKind::isomorphism_pattern, "p does not divide the index but Psi is not an isomorphism");
  }
  if (!rep.hypothesis_A && rep.psi_isomorphism && rep.delta_p != rep.r_p - rep.r) {
    fail(CheckKind::isomorphism_pattern, "Psi is an isomorphism with p | index and delta_p != r_p - r");
  }
  if (rep.hypothesis_A && rep.r > 0 && rep.t_p > 0 && !rep.eigensystems_matched) {
    fail(CheckKind::eigensystem_matching, "some character occurs in only one degree");
  }
  return out;
}

nlohmann::ordered_json report_to_json(const ConfigReport& rep) {
  nlohmann::ordered_json j;
  j["field"] = rep.field;
  j["modulus_norm"] = rep.modulus_norm;
  j["p"] = rep.p;
  j["r"] = rep.r;
  j["r_p"] = rep.r_p;
  j["delta_p"] = rep.delta_p;
  j["t_p"] = rep.t_p;
  j["h_plus"] = rep.h_plus;
  j["index"] = rep.index;
  j["hypothesis_A"] = rep.hypothesis_A;
  j["dim_H0"] = rep.dim_H0;
  j["dim_H1"] = rep.dim_H1;
  j["dim_psi_domain"] = rep.dim_psi_domain;
  j["dim_psi_image"] = rep.dim_psi_image;
  j["psi_isomorphism"] = rep.psi_isomorphism;
  j["certificate_primes"] = rep.certificate_primes;
  j["eigensystems"] = {{"count", rep.eigensystem_count}, {"matched_both_degrees", rep.eigensystems_matched}};
  return j;
}

std::string report_json(const ConfigReport& rep) { return report_to_json(rep).dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string reports_csv(const std::vector<ConfigReport>& reports) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : reports) {
    os << csv_field(r.field) << ',' << r.modulus_norm << ',' << r.p << ',' << r.r << ',' << r.r_p << ','
       << r.delta_p << ',' << r.t_p << ',' << r.h_plus << ',' << r.index << ',' << csv_bool(r.hypothesis_A) << ','
       << csv_bool(r.psi_isomorphism) << ',' << csv_bool(r.eigensystems_matched) << "\n";
  }
  return os.str();
}

}  // namespace dhecke
