#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mvhermite/weight.hpp"

namespace mvh {

struct CheckResult {
  std::string id;      // stable identity name, e.g. "pearson2"
  std::string params;  // human-readable parameter point
  bool pass = false;
  bool report_only = false;  // audit lines never fail a run
  std::string detail;
};

struct SweepConfig {
  std::vector<int> Ns{1, 2, 3, 4, 5};
  std::vector<Rational> nus{Rational(1, 2), Rational(1), Rational(3, 2),
                            Rational(5, 2)};
  int nmax = 8;
  int mmax = 3;  // product-expansion degree cap (n + m stays <= 2*mmax)
  bool negative_control = false;  // corrupt the weight to prove checks can fail
};

// Family points used across all sweeps: pochhammer, gamma (lambda = 1),
// flat (rho = 1, C = 1/2).
WeightFamily make_family(FamilyId id, int N, const Rational& nu);
std::vector<FamilyId> all_families();

using Suite = std::function<std::vector<CheckResult>(const SweepConfig&)>;

std::vector<CheckResult> suite_pearson(const SweepConfig& cfg);
std::vector<CheckResult> suite_routes(const SweepConfig& cfg);
std::vector<CheckResult> suite_structure(const SweepConfig& cfg);
std::vector<CheckResult> suite_eigen(const SweepConfig& cfg);
std::vector<CheckResult> suite_ladders(const SweepConfig& cfg);
std::vector<CheckResult> suite_orthogonality(const SweepConfig& cfg);
std::vector<CheckResult> suite_diffops(const SweepConfig& cfg);
std::vector<CheckResult> suite_connection(const SweepConfig& cfg);
std::vector<CheckResult> suite_burchnall(const SweepConfig& cfg);
std::vector<CheckResult> suite_toda_exact(const SweepConfig& cfg);
std::vector<CheckResult> suite_toda_numeric(const SweepConfig& cfg);
std::vector<CheckResult> suite_commutant(const SweepConfig& cfg);
std::vector<CheckResult> suite_vanishing(const SweepConfig& cfg);
std::vector<CheckResult> suite_audit(const SweepConfig& cfg);

// Name -> suite map used by the CLI; "all" concatenates everything.
std::vector<std::pair<std::string, Suite>> suite_registry();

// Runs jobs over worker threads; MVHERMITE_THREADS caps the pool.
void run_parallel(std::vector<std::function<void()>> jobs);

}  // namespace mvh
