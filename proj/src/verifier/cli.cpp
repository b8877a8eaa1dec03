#include "dhecke/verifier/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dhecke/core/errors.hpp"
#include "dhecke/verifier/sweep.hpp"

namespace dhecke {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::vector<std::int64_t> d;
  std::vector<std::string> descriptors;
  std::uint64_t modulus_norm = 1;
  std::optional<std::int64_t> modulus;
  std::vector<u64> primes;
  std::size_t budget = 50;
  std::string format = "json";
  std::uint64_t cap_residue = 100000;
  std::string out_path;
};

void add_field_source(CLI::App* cmd, Options& o, bool many) {
  auto* d = cmd->add_option("--d", o.d, many ? "Squarefree d for native Q(sqrt d), comma separated"
                                             : "Squarefree d for native Q(sqrt d)");
  auto* desc = cmd->add_option("--descriptor", o.descriptors, "Field descriptor JSON file");
  if (many) {
    d->delimiter(',');
  } else {
    d->expected(1);
    desc->expected(1);
  }
}

void add_output(CLI::App* cmd, Options& o, bool csv) {
  if (csv) cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
}

void add_prime(CLI::App* cmd, Options& o, bool many) {
  auto* opt = cmd->add_option("--prime", o.primes, many ? "Primes p, comma separated" : "The prime p");
  if (many) {
    opt->delimiter(',');
  } else {
    opt->expected(1)->required();
  }
}

ordered_json integer_json(const Integer& a) {
  const Integer lim(std::numeric_limits<std::int64_t>::max());
  if (abs_value(a) <= lim) return to_i64(a);
  return a.str();
}

ordered_json integers_json(const std::vector<Integer>& v) {
  ordered_json j = ordered_json::array();
  for (const auto& a : v) j.push_back(integer_json(a));
  return j;
}

std::vector<ValidatedDescriptor> load_fields(const Options& o, std::ostream& err) {
  std::vector<ValidatedDescriptor> out;
  for (auto d : o.d) out.push_back(native_real_quadratic(d));
  for (const auto& path : o.descriptors) out.push_back(load_field_descriptor(path));
  for (const auto& v : out) {
    for (const auto& w : v.warnings) err << "warning: " << v.descriptor.label << ": " << w << "\n";
  }
  return out;
}

ValidatedDescriptor load_one_field(const Options& o, std::ostream& err) {
  auto fields = load_fields(o, err);
  if (fields.size() != 1) throw ValidationError("exactly one of --d or --descriptor is required");
  return std::move(fields.front());
}

void warn_about_primes(const Options& o, std::ostream& err) {
  if (std::find(o.primes.begin(), o.primes.end(), 2) != o.primes.end()) {
    err << "warning: p = 2 is accepted but flagged: graded signs collapse and the index is usually even\n";
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << text)) throw ParseError("cannot write " + o.out_path);
}

ordered_json functional_json(const Functional& phi) {
  ordered_json j;
  j["ell"] = phi.v.ell;
  j["f"] = phi.v.f;
  j["norm"] = phi.v.norm;
  j["ideal"] = ideal_to_string(phi.v.ideal);
  j["values"] = phi.values;
  return j;
}

int field_info(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedDescriptor v = load_one_field(o, err);
  const FieldDescriptor& fd = v.descriptor;
  const NumberField F(fd);
  const UnitGroup U = unit_group(F);
  ordered_json j;
  j["label"] = fd.label;
  j["provenance"] = fd.provenance == Provenance::native ? "native" : "ingested";
  j["min_poly"] = integers_json(fd.min_poly);
  j["degree"] = fd.degree();
  j["signature"] = {fd.r1, fd.r2};
  j["discriminant"] = integer_json(v.discriminant);
  j["torsion"] = {{"order", fd.torsion_order}, {"generator", integers_json(fd.torsion_generator)}};
  j["fundamental_units"] = ordered_json::array();
  j["unit_norms"] = ordered_json::array();
  for (std::size_t i = 0; i < fd.fundamental_units.size(); ++i) {
    j["fundamental_units"].push_back(integers_json(fd.fundamental_units[i]));
    j["unit_norms"].push_back(integer_json(F.norm(U.fundamental[i])));
  }
  j["class_number"] = fd.class_number;
  j["irreducibility"] = {
      {"kind", v.certificate.kind == IrreducibilityCertificate::Kind::irreducible_mod_prime ? "irreducible_mod_prime"
                                                                                           : "factor_degrees"},
      {"primes", v.certificate.primes}};
  j["warnings"] = v.warnings;
  emit(o, j.dump(2) + "\n", out);
  return kExitOk;
}

int invariants(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedDescriptor v = load_one_field(o, err);
  if (o.primes.empty()) throw ValidationError("--prime is required");
  SweepConfig check;
  check.primes = o.primes;
  check.validate();
  warn_about_primes(o, err);
  const NumberField F(v.descriptor);
  std::vector<IdealHNF> moduli;
  if (o.modulus) {
    if (*o.modulus < 1) throw ValidationError("--modulus must be positive");
    moduli.push_back(integer_ideal(F, Integer(*o.modulus)));
  } else {
    moduli = moduli_of_norm(F, o.modulus_norm);
    if (moduli.empty()) err << "warning: no usable ideal of norm " << o.modulus_norm << "\n";
  }
  std::vector<ConfigReport> reports;
  bool failed = false, short_of_budget = false;
  for (const auto& m : moduli) {
    for (auto p : o.primes) {
      if (m.norm % p == 0) throw ValidationError("modulus norm " + m.norm.str() + " is not coprime to p = " + std::to_string(p));
    }
    const Level L(F, m, o.cap_residue);
    for (auto p : o.primes) {
      reports.push_back(run_invariants(L, p, o.budget));
      for (const auto& f : check_report(reports.back())) {
        err << "FAIL " << F.label() << " " << ideal_to_string(m) << " p=" << p << " " << check_name(f.kind) << ": "
            << f.detail << "\n";
        (f.kind == CheckKind::budget ? short_of_budget : failed) = true;
      }
    }
  }
  const int code = failed ? kExitCheckFailed : short_of_budget ? kExitShortfall : kExitOk;
  if (o.format == "csv") {
    emit(o, reports_csv(reports), out);
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    emit(o, j.dump(2) + "\n", out);
  }
  return code;
}

int verify(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  for (auto& v : load_fields(o, err)) cfg.fields.push_back(std::move(v.descriptor));
  cfg.modulus_norm_bound = o.modulus_norm;
  cfg.primes = o.primes;
  cfg.budget = o.budget;
  cfg.format = o.format == "csv" ? ReportFormat::csv : ReportFormat::json;
  cfg.residue_cap = o.cap_residue;
  warn_about_primes(o, err);
  const SweepResult result = run_verify(cfg);
  for (const auto& f : result.failures) {
    err << (f.shortfall ? "SHORTFALL " : "FAIL ") << f.field << " " << f.modulus << " p=" << f.p << " " << f.check
        << ": " << f.detail << "\n";
  }
  emit(o, cfg.format == ReportFormat::csv ? reports_csv(result.reports) : sweep_json(result), out);
  return result.exit_code();
}

int scan_primes(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedDescriptor v = load_one_field(o, err);
  const NumberField F(v.descriptor);
  const UnitGroup U = unit_group(F);
  const u64 p = o.primes.front();
  if (!is_prime(p)) throw ValidationError("--prime " + std::to_string(p) + " is not prime");
  warn_about_primes(o, err);
  std::vector<Functional> phis;
  for (const auto& pv : scan_t1(F, Integer(o.modulus_norm), p, o.budget)) phis.push_back(full_unit_functional(F, U, pv, p));
  if (o.format == "csv") {
    std::ostringstream os;
    os << "ell,f,norm,values\n";
    for (const auto& phi : phis) {
      os << phi.v.ell << ',' << phi.v.f << ',' << phi.v.norm << ',';
      for (std::size_t i = 0; i < phi.values.size(); ++i) os << (i ? ";" : "") << phi.values[i];
      os << "\n";
    }
    emit(o, os.str(), out);
  } else {
    ordered_json j;
    j["field"] = F.label();
    j["p"] = p;
    j["modulus_norm"] = o.modulus_norm;
    j["primes"] = ordered_json::array();
    for (const auto& phi : phis) j["primes"].push_back(functional_json(phi));
    emit(o, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

int spanning(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedDescriptor v = load_one_field(o, err);
  const NumberField F(v.descriptor);
  const UnitGroup U = unit_group(F);
  const u64 p = o.primes.front();
  if (!is_prime(p)) throw ValidationError("--prime " + std::to_string(p) + " is not prime");
  warn_about_primes(o, err);
  const SpanningSet S = spanning_set(F, U, p, o.budget);
  ordered_json j;
  j["field"] = F.label();
  j["p"] = p;
  j["r_p"] = compute_rp(F, p);
  j["complete"] = S.complete;
  j["scanned"] = S.scanned;
  j["primes"] = ordered_json::array();
  for (const auto& phi : S.primes) j["primes"].push_back(functional_json(phi));
  j["matrix"] = ordered_json::array();
  for (Eigen::Index i = 0; i < S.matrix.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < S.matrix.cols(); ++k) row.push_back(S.matrix(i, k));
    j["matrix"].push_back(std::move(row));
  }
  emit(o, j.dump(2) + "\n", out);
  if (!S.complete) {
    err << "SHORTFALL no spanning set within " << o.budget << " T1 primes\n";
    return kExitShortfall;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derived Hecke operator checks on arithmetic tori of number fields", "dhecke"};
  app.require_subcommand(1);

  Options info_o, inv_o, ver_o, scan_o, span_o;
  auto* field = app.add_subcommand("field", "Field descriptors")->require_subcommand(1);
  auto* info = field->add_subcommand("info", "Validate a field and print its data");
  add_field_source(info, info_o, false);
  add_output(info, info_o, false);

  auto* inv = app.add_subcommand("invariants", "Report for one field, the ideals of one norm and some primes");
  add_field_source(inv, inv_o, false);
  inv->add_option("--modulus-norm", inv_o.modulus_norm, "Use every ideal of exactly this norm");
  inv->add_option("--modulus", inv_o.modulus, "Use the ideal (m) for this positive integer m");
  add_prime(inv, inv_o, true);
  inv->add_option("--budget", inv_o.budget, "T1 primes scanned for t_p");
  inv->add_option("--cap-residue", inv_o.cap_residue, "Largest |O/N| enumerated");
  add_output(inv, inv_o, true);

  auto* ver = app.add_subcommand("verify", "Check the theorems over a sweep of fields, moduli and primes");
  add_field_source(ver, ver_o, true);
  ver->add_option("--modulus-norm", ver_o.modulus_norm, "Every ideal of norm up to this bound is a modulus");
  add_prime(ver, ver_o, true);
  ver->add_option("--budget", ver_o.budget, "T1 primes scanned for t_p");
  ver->add_option("--cap-residue", ver_o.cap_residue, "Largest |O/N| enumerated");
  add_output(ver, ver_o, true);

  auto* scan = app.add_subcommand("scan-primes", "List T1 primes and their functionals on the units");
  add_field_source(scan, scan_o, false);
  scan->add_option("--modulus-norm", scan_o.modulus_norm, "Skip primes whose norm shares a factor with this");
  add_prime(scan, scan_o, false);
  scan->add_option("--budget", scan_o.budget, "Number of primes listed");
  add_output(scan, scan_o, true);

  auto* span = app.add_subcommand("spanning-set", "Find T1 primes whose functionals span Hom(O^x, F_p)");
  add_field_source(span, span_o, false);
  add_prime(span, span_o, false);
  span->add_option("--budget", span_o.budget, "T1 primes scanned");
  add_output(span, span_o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*info) return field_info(info_o, out, err);
    if (*inv) return invariants(inv_o, out, err);
    if (*ver) return verify(ver_o, out, err);
    if (*scan) return scan_primes(scan_o, out, err);
    if (*span) return spanning(span_o, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitShortfall;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitShortfall;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadInput;
}

}  // namespace dhecke
