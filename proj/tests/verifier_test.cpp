#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dhecke/core/errors.hpp"
#include "dhecke/verifier/cli.hpp"
#include "dhecke/verifier/sweep.hpp"

using namespace dhecke;

namespace {

const std::filesystem::path kData = DHECKE_DATA_DIR;

std::string descriptor_path(const char* name) { return (kData / "descriptors" / name).string(); }

std::string with(const std::string& key, const std::string& value) {
  nlohmann::json j = {{"label", "x"},
                      {"min_poly", {-2, 0, 1}},
                      {"signature", {2, 0}},
                      {"torsion", {{"order", 2}, {"generator", {-1}}}},
                      {"fundamental_units", {{1, 1}}},
                      {"class_number", 1}};
  j[key] = nlohmann::json::parse(value);
  return j.dump();
}

// Message of the ValidationError thrown by validating this descriptor text.
std::string rejection(const std::string& text) {
  try {
    validate_descriptor(parse_field_descriptor(text));
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "accepted";
}

struct Cli {
  int code = -1;
  std::string out, err;
};

Cli cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Cli r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

SweepConfig small_sweep(std::vector<std::int64_t> ds, std::uint64_t bound, std::vector<u64> primes) {
  SweepConfig cfg;
  for (auto d : ds) cfg.fields.push_back(native_real_quadratic(d).descriptor);
  cfg.modulus_norm_bound = bound;
  cfg.primes = std::move(primes);
  return cfg;
}

}  // namespace

TEST(Descriptor, SqrtTwoFileIsAccepted) {
  const ValidatedDescriptor v = load_field_descriptor(descriptor_path("q_sqrt2.json"));
  EXPECT_EQ(v.descriptor.label, "Q(sqrt(2))");
  EXPECT_EQ(v.discriminant, 8);
  EXPECT_EQ(v.certificate.kind, IrreducibilityCertificate::Kind::irreducible_mod_prime);
  EXPECT_EQ(v.certificate.primes, std::vector<u64>{3});
  EXPECT_TRUE(v.warnings.empty());
  EXPECT_EQ(v.descriptor.provenance, Provenance::ingested);
}

TEST(Descriptor, IntegersMayBeStrings) {
  const ValidatedDescriptor v = load_field_descriptor(descriptor_path("q_sqrt3.json"));
  EXPECT_EQ(v.descriptor.min_poly[0], -3);
  const FieldDescriptor big = parse_field_descriptor(with("fundamental_units", R"([["1", "123456789012345678901234567890"]])"));
  EXPECT_EQ(big.fundamental_units[0][1], Integer("123456789012345678901234567890"));
}

TEST(Descriptor, NonMonicIsRejected) {
  EXPECT_THROW(load_field_descriptor(descriptor_path("non_monic.json")), ValidationError);
  EXPECT_NE(rejection(with("min_poly", "[-2, 0, 2]")).find("monic"), std::string::npos);
}

TEST(Descriptor, SquareOfFundamentalUnitIsAcceptedWithWarning) {
  const ValidatedDescriptor v = load_field_descriptor(descriptor_path("q_sqrt2_square_unit.json"));
  ASSERT_EQ(v.warnings.size(), 1u);
  EXPECT_NE(v.warnings[0].find("(3,2)"), std::string::npos);
  // A wrong class number is data too, flagged the same way.
  const auto w = validate_descriptor(parse_field_descriptor(with("class_number", "2"))).warnings;
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("class_number"), std::string::npos);
}

TEST(Descriptor, FirstFailingInvariantIsNamed) {
  EXPECT_NE(rejection(with("min_poly", "[1]")).find("degree"), std::string::npos);
  EXPECT_NE(rejection(with("signature", "[1, 1]")).find("signature"), std::string::npos);
  EXPECT_NE(rejection(with("min_poly", "[1, 2, 1]")).find("square-free"), std::string::npos);
  EXPECT_NE(rejection(with("min_poly", "[-1, 0, 1]")).find("irreducibility"), std::string::npos);
  EXPECT_NE(rejection(with("torsion", R"({"order": 4, "generator": [-1]})")).find("order"), std::string::npos);
  EXPECT_NE(rejection(with("fundamental_units", "[[3, 1]]")).find("fundamental unit 0"), std::string::npos);
  EXPECT_NE(rejection(with("fundamental_units", "[]")).find("expected 1"), std::string::npos);
  EXPECT_NE(rejection(with("class_number", "0")).find("class_number"), std::string::npos);
  // Both wrong: the polynomial is checked before the units.
  EXPECT_NE(rejection(with("min_poly", "[-2, 0, 3]")).find("monic"), std::string::npos);
}

TEST(Descriptor, ParseErrors) {
  EXPECT_THROW(parse_field_descriptor("{"), ParseError);
  EXPECT_THROW(parse_field_descriptor("[]"), ParseError);
  EXPECT_THROW(parse_field_descriptor(R"({"label": "x"})"), ParseError);
  EXPECT_THROW(parse_field_descriptor(with("min_poly", "[-2.5, 0, 1]")), ParseError);
  EXPECT_THROW(parse_field_descriptor(with("min_poly", R"(["-2x", 0, 1])")), ParseError);
  EXPECT_THROW(parse_field_descriptor(with("signature", "[2]")), ParseError);
  EXPECT_THROW(parse_field_descriptor(with("torsion", "2")), ParseError);
  EXPECT_THROW(load_field_descriptor(kData / "descriptors" / "missing.json"), ParseError);
}

TEST(Descriptor, IrreducibilityCertificates) {
  // x^4 + 8x + 12 has Galois group A4: no 4-cycles, so it factors mod every
  // prime, but patterns (1,3) and (2,2) leave no room for a rational factor.
  const std::vector<Integer> a4{12, 8, 0, 0, 1};
  const auto cert = irreducibility_certificate(a4, poly_discriminant(a4));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->kind, IrreducibilityCertificate::Kind::factor_degrees);
  EXPECT_GE(cert->primes.size(), 2u);
  // x^4 - 10x^2 + 1 (minimal polynomial of √2 + √3) splits into quadratics
  // mod every prime; it is rejected rather than guessed.
  const std::vector<Integer> v4{1, 0, -10, 0, 1};
  EXPECT_FALSE(irreducibility_certificate(v4, poly_discriminant(v4)).has_value());
  const std::vector<Integer> reducible{2, -3, 1};
  EXPECT_FALSE(irreducibility_certificate(reducible, poly_discriminant(reducible)).has_value());
}

TEST(Descriptor, CubicFieldIsAccepted) {
  const ValidatedDescriptor v = load_field_descriptor(descriptor_path("cubic_disc49.json"));
  EXPECT_EQ(v.discriminant, 49);
  EXPECT_EQ(v.descriptor.degree(), 3);
}

TEST(Descriptor, NativeQuadratic) {
  const ValidatedDescriptor v = native_real_quadratic(5);
  EXPECT_EQ(v.descriptor.provenance, Provenance::native);
  EXPECT_EQ(v.descriptor.min_poly, (std::vector<Integer>{-1, -1, 1}));
  EXPECT_THROW(native_real_quadratic(4), ValidationError);
  EXPECT_THROW(native_real_quadratic(1), ValidationError);
  EXPECT_EQ(native_quadratic_parameter({-2, 0, 1}), 2);
  EXPECT_EQ(native_quadratic_parameter({-1, -1, 1}), 5);
  EXPECT_FALSE(native_quadratic_parameter({-5, 0, 1}).has_value());
  EXPECT_FALSE(native_quadratic_parameter({-8, 0, 1}).has_value());
}

TEST(RunInvariants, WorkedExamples) {
  {
    const NumberField F(native_real_quadratic(2).descriptor);
    const Level L(F, unit_ideal(F));
    const ConfigReport r = run_invariants(L, 5);
    EXPECT_EQ(r.t_p, 1);
    EXPECT_EQ(r.delta_p, 0);
    EXPECT_EQ(r.r_p, 1);
    EXPECT_EQ(r.h_plus, 1);
    EXPECT_EQ(r.index, 4);
    EXPECT_TRUE(r.psi_isomorphism);
    EXPECT_TRUE(check_report(r).empty());
  }
  {
    const NumberField F(native_real_quadratic(2).descriptor);
    const Level L(F, integer_ideal(F, 7));
    const ConfigReport r = run_invariants(L, 3);
    EXPECT_EQ(r.t_p, 0);
    EXPECT_EQ(r.delta_p, 1);
    EXPECT_FALSE(r.hypothesis_A);
    EXPECT_EQ(r.modulus_norm, 49);
    EXPECT_TRUE(check_report(r).empty());
  }
  {
    const NumberField F(native_real_quadratic(3).descriptor);
    const Level L(F, unit_ideal(F));
    const ConfigReport r = run_invariants(L, 5);
    EXPECT_EQ(r.h_plus, 2);
    EXPECT_EQ(r.t_p, 1);
    EXPECT_TRUE(r.psi_isomorphism);
    EXPECT_EQ(r.eigensystem_count, 2u);
  }
}

TEST(CheckReport, TamperedReportsAreCaught) {
  const NumberField F(native_real_quadratic(2).descriptor);
  const Level L(F, integer_ideal(F, 7));
  const ConfigReport good = run_invariants(L, 5);
  ASSERT_TRUE(check_report(good).empty());
  auto kinds = [](const ConfigReport& r) {
    std::set<CheckKind> out;
    for (const auto& f : check_report(r)) out.insert(f.kind);
    return out;
  };
  ConfigReport r = good;
  r.t_p = 0;
  EXPECT_TRUE(kinds(r).count(CheckKind::tp_identity));
  r = good;
  r.dim_psi_image = 11;
  EXPECT_TRUE(kinds(r).count(CheckKind::dimensions));
  r = good;
  r.psi_isomorphism = false;
  EXPECT_TRUE(kinds(r).count(CheckKind::isomorphism_pattern));
  r = good;
  r.eigensystems_matched = false;
  EXPECT_TRUE(kinds(r).count(CheckKind::eigensystem_matching));
  r = good;
  r.shortfall = true;
  r.t_p = 0;
  EXPECT_EQ(kinds(r), std::set<CheckKind>{CheckKind::budget});
  // p | index with Ψ an isomorphism is allowed only when δ_p = r_p - r.
  r = run_invariants(L, 3);
  r.psi_isomorphism = true;
  EXPECT_TRUE(kinds(r).count(CheckKind::isomorphism_pattern));
}

TEST(RunVerify, SmallSweepPasses) {
  const SweepResult res = run_verify(small_sweep({2, 3, 5}, 20, {3, 5, 7}));
  EXPECT_EQ(res.exit_code(), 0);
  EXPECT_TRUE(res.failures.empty());
  EXPECT_GT(res.reports.size(), 50u);
  for (const auto& r : res.reports) {
    EXPECT_EQ(r.t_p, r.r_p - r.delta_p) << r.field << " " << r.modulus << " p=" << r.p;
    EXPECT_NE(r.modulus_norm % static_cast<std::int64_t>(r.p), 0);
  }
}

TEST(RunVerify, SweepThroughFailingHypothesisPasses) {
  const SweepResult res = run_verify(small_sweep({2}, 49, {3}));
  EXPECT_EQ(res.exit_code(), 0);
  bool saw_seven = false;
  for (const auto& r : res.reports) {
    if (r.modulus == "[[7,0],[0,7]]") {
      saw_seven = true;
      EXPECT_FALSE(r.hypothesis_A);
      EXPECT_EQ(r.t_p, 0);
    }
  }
  EXPECT_TRUE(saw_seven);
}

TEST(RunVerify, EmptySweep) {
  const SweepResult none = run_verify(small_sweep({}, 20, {3}));
  EXPECT_EQ(none.exit_code(), 0);
  EXPECT_TRUE(none.reports.empty());
  const auto j = nlohmann::json::parse(sweep_json(none));
  EXPECT_EQ(j["configurations"], 0);
  EXPECT_TRUE(j["reports"].empty());
  EXPECT_EQ(reports_csv(none.reports), std::string(kCsvHeader) + "\n");
  EXPECT_TRUE(run_verify(small_sweep({2}, 20, {})).reports.empty());
}

TEST(RunVerify, BudgetShortfallExitsTwo) {
  SweepConfig cfg = small_sweep({2}, 1, {5});
  cfg.budget = 1;
  const SweepResult res = run_verify(cfg);
  ASSERT_EQ(res.failures.size(), 1u);
  EXPECT_TRUE(res.failures[0].shortfall);
  EXPECT_EQ(res.exit_code(), 2);
}

TEST(RunVerify, CapShortfallExitsTwo) {
  SweepConfig cfg = small_sweep({2}, 20, {5});
  cfg.residue_cap = 10;
  const SweepResult res = run_verify(cfg);
  EXPECT_EQ(res.exit_code(), 2);
  ASSERT_FALSE(res.failures.empty());
  EXPECT_EQ(res.failures[0].check, "cap");
}

TEST(RunVerify, ConfigValidation) {
  EXPECT_THROW(run_verify(small_sweep({2}, 20, {3, 3})), ValidationError);
  EXPECT_THROW(run_verify(small_sweep({2}, 20, {9})), ValidationError);
  EXPECT_THROW(run_verify(small_sweep({2}, 0, {3})), ValidationError);
}

TEST(Reports, CsvAndJsonCarryTheSameNumbers) {
  const SweepResult res = run_verify(small_sweep({2, 3}, 15, {3, 5}));
  const auto j = nlohmann::json::parse(sweep_json(res));
  const auto rows = csv_rows(reports_csv(res.reports));
  ASSERT_EQ(rows.size(), j["reports"].size() + 1);
  const auto& header = rows[0];
  for (std::size_t i = 0; i < j["reports"].size(); ++i) {
    const auto& rep = j["reports"][i];
    for (std::size_t c = 0; c < header.size(); ++c) {
      const nlohmann::json cell = header[c] == "field" ? nlohmann::json(rows[i + 1][c]) : nlohmann::json::parse(rows[i + 1][c]);
      const nlohmann::json expected =
          header[c] == "eigensystems_matched" ? rep["eigensystems"]["matched_both_degrees"] : rep[header[c]];
      EXPECT_EQ(cell, expected) << "row " << i << " column " << header[c];
    }
  }
}

TEST(Reports, JsonKeysInDocumentedOrder) {
  const NumberField F(native_real_quadratic(2).descriptor);
  const Level L(F, unit_ideal(F));
  const auto j = report_to_json(run_invariants(L, 5));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"field", "modulus_norm", "p", "r", "r_p", "delta_p", "t_p", "h_plus", "index",
                                            "hypothesis_A", "dim_H0", "dim_H1", "dim_psi_domain", "dim_psi_image",
                                            "psi_isomorphism", "certificate_primes", "eigensystems"}));
}

TEST(Reports, ByteDeterministic) {
  const SweepConfig cfg = small_sweep({2, 5}, 20, {3, 7});
  const SweepResult a = run_verify(cfg), b = run_verify(cfg);
  EXPECT_EQ(sweep_json(a), sweep_json(b));
  EXPECT_EQ(reports_csv(a.reports), reports_csv(b.reports));
  const std::vector<std::string> args{"verify", "--d", "2,3", "--modulus-norm", "12", "--prime", "3,5"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, FieldInfo) {
  const Cli r = cli({"field", "info", "--d", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["fundamental_units"][0], nlohmann::json({1, 1}));
  EXPECT_EQ(j["unit_norms"][0], -1);
  EXPECT_EQ(j["irreducibility"]["primes"][0], 3);
  const Cli w = cli({"field", "info", "--descriptor", descriptor_path("q_sqrt2_square_unit.json")});
  EXPECT_EQ(w.code, kExitOk);
  EXPECT_NE(w.err.find("warning"), std::string::npos);
}

TEST(Cli, InputErrorsExitThree) {
  EXPECT_EQ(cli({"field", "info", "--descriptor", descriptor_path("non_monic.json")}).code, kExitBadInput);
  EXPECT_EQ(cli({"field", "info", "--descriptor", descriptor_path("missing.json")}).code, kExitBadInput);
  EXPECT_EQ(cli({"field", "info"}).code, kExitBadInput);
  EXPECT_EQ(cli({"field", "info", "--d", "2", "--descriptor", descriptor_path("q_sqrt2.json")}).code, kExitBadInput);
  EXPECT_EQ(cli({"verify", "--bogus"}).code, kExitBadInput);
  EXPECT_EQ(cli({"verify", "--d", "2", "--prime", "4"}).code, kExitBadInput);
  EXPECT_EQ(cli({"verify", "--d", "8", "--prime", "3"}).code, kExitBadInput);
  EXPECT_EQ(cli({"verify", "--format", "xml"}).code, kExitBadInput);
  EXPECT_EQ(cli({"invariants", "--d", "2", "--modulus-norm", "3", "--prime", "3"}).code, kExitOk);
  EXPECT_EQ(cli({"invariants", "--d", "2", "--modulus", "3", "--prime", "3"}).code, kExitBadInput);
  EXPECT_EQ(cli({}).code, kExitBadInput);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(Cli, InvariantsAndVerify) {
  const Cli inv = cli({"invariants", "--d", "2", "--modulus", "7", "--prime", "3,5"});
  ASSERT_EQ(inv.code, kExitOk) << inv.err;
  const auto j = nlohmann::json::parse(inv.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["h_plus"], 12);
  EXPECT_EQ(j[0]["index"], 12);
  EXPECT_EQ(j[1]["dim_psi_image"], 12);

  const Cli ver = cli({"verify", "--d", "2,3,5", "--modulus-norm", "20", "--prime", "3,5,7", "--format", "csv"});
  EXPECT_EQ(ver.code, kExitOk) << ver.err;
  EXPECT_EQ(ver.out.substr(0, ver.out.find('\n')), kCsvHeader);
  EXPECT_EQ(cli({"verify", "--d", "2", "--prime", "5", "--budget", "1"}).code, kExitShortfall);
  const Cli empty = cli({"verify"});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::parse(empty.out)["reports"].empty());
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "dhecke_verifier_test.json";
  std::filesystem::remove(path);
  const Cli r = cli({"verify", "--d", "2", "--prime", "5", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["reports"][0]["index"], 4);
  std::filesystem::remove(path);
}

TEST(Cli, ScanPrimesAndSpanningSet) {
  const Cli scan = cli({"scan-primes", "--d", "2", "--prime", "5", "--budget", "6"});
  ASSERT_EQ(scan.code, kExitOk) << scan.err;
  const auto primes = nlohmann::json::parse(scan.out)["primes"];
  ASSERT_EQ(primes.size(), 6u);
  for (const auto& v : primes) EXPECT_EQ((v["norm"].get<u64>() - 1) % 5, 0u);
  EXPECT_EQ(primes[0]["ell"], 11);

  const Cli two = cli({"spanning-set", "--d", "2", "--prime", "2"});
  ASSERT_EQ(two.code, kExitOk);
  EXPECT_NE(two.err.find("p = 2"), std::string::npos);
  const auto s = nlohmann::json::parse(two.out);
  EXPECT_EQ(s["r_p"], 2);
  EXPECT_EQ(s["primes"].size(), 2u);
  EXPECT_EQ(cli({"spanning-set", "--d", "2", "--prime", "5", "--budget", "0"}).code, kExitShortfall);
}
