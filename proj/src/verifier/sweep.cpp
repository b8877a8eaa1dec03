#include "dhecke/verifier/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <set>
#include <thread>

#include "dhecke/core/errors.hpp"

namespace dhecke {

void SweepConfig::validate() const {
  if (modulus_norm_bound < 1) throw ValidationError("modulus norm bound must be positive");
  if (budget < 1) throw ValidationError("budget must be positive");
  if (residue_cap < 1) throw ValidationError("residue cap must be positive");
  std::set<u64> seen;
  for (auto p : primes) {
    if (!is_prime(p)) throw ValidationError("--prime " + std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw ValidationError("--prime " + std::to_string(p) + " listed twice");
  }
}

int SweepResult::exit_code() const {
  int code = 0;
  for (const auto& f : failures) {
    if (!f.shortfall) return 1;
    code = 2;
  }
  return code;
}

std::vector<IdealHNF> moduli_of_norm(const NumberField& F, std::uint64_t norm) {
  std::vector<IdealHNF> out;
  for (auto& a : ideals_up_to_norm(F, norm)) {
    if (a.ideal.norm == norm) out.push_back(std::move(a.ideal));
  }
  return out;
}

namespace {

struct Job {
  std::size_t field = 0;
  IdealHNF modulus;
};

struct JobResult {
  std::vector<ConfigReport> reports;
  std::vector<SweepFailure> failures;
};

SweepFailure failure_from(const NumberField& F, const IdealHNF& m, u64 p, std::string check, std::string detail,
                          bool shortfall) {
  return SweepFailure{F.label(), ideal_to_string(m), to_i64(m.norm), p, std::move(check), std::move(detail), shortfall};
}

template <class Body>
void guarded(JobResult& out, const NumberField& F, const IdealHNF& m, u64 p, Body&& body) {
  try {
    body();
  } catch (const CapExceeded& e) {
    out.failures.push_back(failure_from(F, m, p, "cap", e.what(), true));
  } catch (const Inconclusive& e) {
    out.failures.push_back(failure_from(F, m, p, "cap", e.what(), true));
  } catch (const std::exception& e) {
    out.failures.push_back(failure_from(F, m, p, "error", e.what(), false));
  }
}

JobResult run_job(const NumberField& F, const IdealHNF& modulus, const SweepConfig& cfg) {
  JobResult out;
  guarded(out, F, modulus, 0, [&] {
    const Level L(F, modulus, cfg.residue_cap, cfg.search);
    for (auto p : cfg.primes) {
      if (modulus.norm % p == 0) continue;
      guarded(out, F, modulus, p, [&] {
        ConfigReport rep = run_invariants(L, p, cfg.budget);
        for (auto& f : check_report(rep)) {
          out.failures.push_back(
              failure_from(F, modulus, p, check_name(f.kind), std::move(f.detail), f.kind == CheckKind::budget));
        }
        out.reports.push_back(std::move(rep));
      });
    }
  });
  return out;
}

}  // namespace

SweepResult run_verify(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<std::unique_ptr<NumberField>> fields;
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < cfg.fields.size(); ++i) {
    fields.push_back(std::make_unique<NumberField>(cfg.fields[i]));
    for (auto& a : ideals_up_to_norm(*fields.back(), cfg.modulus_norm_bound)) {
      const bool any = std::any_of(cfg.primes.begin(), cfg.primes.end(), [&](u64 p) { return a.ideal.norm % p != 0; });
      if (any) jobs.push_back(Job{i, std::move(a.ideal)});
    }
  }

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < jobs.size();) results[k] = run_job(*fields[jobs[k].field], jobs[k].modulus, cfg);
  };
  const std::size_t threads = std::min<std::size_t>(jobs.size(), std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult out;
  for (auto& r : results) {
    std::move(r.reports.begin(), r.reports.end(), std::back_inserter(out.reports));
    std::move(r.failures.begin(), r.failures.end(), std::back_inserter(out.failures));
  }
  return out;
}

std::string sweep_json(const SweepResult& result) {
  nlohmann::ordered_json j;
  j["configurations"] = result.reports.size();
  j["exit_code"] = result.exit_code();
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) j["reports"].push_back(report_to_json(r));
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : result.failures) {
    nlohmann::ordered_json fj;
    fj["field"] = f.field;
    fj["modulus"] = f.modulus;
    fj["modulus_norm"] = f.modulus_norm;
    fj["p"] = f.p;
    fj["check"] = f.check;
    fj["detail"] = f.detail;
    fj["shortfall"] = f.shortfall;
    j["failures"].push_back(std::move(fj));
  }
  return j.dump(2) + "\n";
}

}  // namespace dhecke
