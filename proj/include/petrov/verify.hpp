#pragma once

// Property checks over random instances. Each returns one result line; the
// CLI `verify` command and the acceptance test both run them.

#include <string>
#include <vector>

namespace petrov::verify {

struct CriterionResult {
  std::string id;
  std::string description;
  bool passed = false;
  /// Worst residual observed and the threshold it was held to.
  double worst = 0.0;
  double threshold = 0.0;
  int instances = 0;
  int skipped = 0;
  std::string detail;
};

CriterionResult star_algebra();
CriterionResult block_characterizations(int n);
CriterionResult star_l_einstein_pattern(int n);
CriterionResult sectional_duality(int instances, int planes);
CriterionResult star_h_equivalence(int n);
CriterionResult critical_finite_differences(int n);
CriterionResult t_adapted_eigenplanes(int n);
CriterionResult jordan_round_trip(int per_type);
CriterionResult normal_form_recovery(int n);
CriterionResult s_components_routes(int n);
/// Generator → file text → parse → labels, in process.
CriterionResult catalog_labels(int seeds_per_generator);

struct Counts {
  int block = 1000;
  int star_l = 1000;
  int duality_instances = 100;
  int duality_planes = 100;
  int star_h = 500;
  int critical = 200;
  int adapted = 100;
  int jordan = 300;
  int normal_form = 500;
  int s_components = 100;
  int catalog_seeds = 5;

  /// Every count capped at n (n ≤ 0 leaves the defaults).
  Counts capped(int n) const;
};

std::vector<CriterionResult> run_all(const Counts& counts = {});

/// "PASS id: description (worst ≤ threshold, n instances)".
std::string format_line(const CriterionResult& r);

}  // namespace petrov::verify
