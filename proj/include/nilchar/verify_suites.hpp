#pragma once

#include <string>
#include <vector>

#include "nilchar/algebra_io.hpp"

namespace nilchar {

// Each suite re-derives one block of the classification results from scratch
// and reports one pass/fail entry per case it covers:
//
//   root-tables         positive counts, highest roots, second-center root
//                       sets and their closure properties, per type
//   second-center       the second center of each positive-root algebra is
//                       spanned by the distinguished roots
//   kernel-sweep        square-zero kernel sweeps pin the center for every
//                       type outside the symplectic family; the symplectic
//                       sweep stabilizes at the maximal abelian ideal
//   descent             iterated second-center centralizers stabilize at an
//                       abelian ideal, with hand-checked values pinned for
//                       small ranks
//   example-6d          the six-dimensional worked example, end to end
//   upper-triangular    strictly upper triangular algebras: sweep exactness
//                       and descent values
//   basis-independence  isomorphic presentations (rescaled, permuted,
//                       scrambled bases) produce identical invariants
//   scan-evidence       integer-grid and finite-field scans agree with the
//                       exact computations
struct SuiteOptions {
  int max_rank = 5;  // classical families run up to this rank, E types join
                     // when their rank fits
  unsigned long long scan_budget = 10'000'000;
};

std::vector<std::string> suite_ids();
// Throws std::invalid_argument for an unknown id.
std::vector<Report> run_suite(const std::string& id, const SuiteOptions& opt = {});
// Empty ids means every suite, in registry order.
std::vector<Report> run_suites(const std::vector<std::string>& ids = {},
                               const SuiteOptions& opt = {});

}  // namespace nilchar
