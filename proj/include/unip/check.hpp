#pragma once

#include <string>
#include <vector>

#include "unip/labels.hpp"

namespace unip {

struct CheckResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string detail;  // first failure, when any

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}
  bool ok() const { return failures == 0; }
};

/// Sweep helpers.
std::vector<YoungDiagram> good_parity_orbits(Label star, int size);
std::vector<YoungDiagram> valid_orbits(Label star, int size);
std::vector<GroupForm> group_forms(Label star, const YoungDiagram& d);

namespace checks {

CheckResult diagram_properties(int max_size);
CheckResult collapse_dominance(int max_size);
CheckResult parity_properties(int max_size);
CheckResult duality_oracles(int max_size);
CheckResult principal_zero_extremes(int max_rank);
CheckResult cells_properties(int max_size);
CheckResult nesting_equivalence(int max_size);
CheckResult pap_product_formula(int max_size);
CheckResult wp_independence(int max_size);
CheckResult quaternionic_vanishing(int max_size);
CheckResult signature_sums(int max_size);
CheckResult genfun_equivalence(int max_size);
CheckResult shape_shift_contracts(int max_size);
CheckResult descent_bijectivity(int max_size);
CheckResult double_descent_contracts(int max_size);
CheckResult descent_injectivity(int max_size);
CheckResult lr_properties(int max_size);
CheckResult special_induction_audit(int max_t);
CheckResult oracle_equality(int max_rank);
CheckResult gl_oracle_equality(int max_rank);
CheckResult unitary_realform_equality(int max_pq);
CheckResult quaternionic_realform_equality(int max_rank);
CheckResult count_triple_agreement(int max_rank);

}  // namespace checks

/// The full battery at the given size bound, fanned over `threads` workers
/// (0 = read UNIP_THREADS, default 1). Deterministic aggregate order.
std::vector<CheckResult> run_checks(int max_size, int threads = 0);

}  // namespace unip
