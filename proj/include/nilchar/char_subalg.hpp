// Characteristic subalgebras of nilpotent Lie algebras: the descending
// centralizer-of-second-center chain, the square-zero witness sweep that
// bounds the intersection of the kernels of all square-zero inner
// derivations, coordinate shrink steps for graded bases, and independent
// oracles (rational grid scan, exhaustive mod-p scan) for the sweep value.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilchar/chevalley.hpp"
#include "nilchar/lie_algebra.hpp"

namespace nilchar {

// Chain g = A_0 >= A_1 >= ... with A_{i+1} the centralizer inside A_i of the
// second center of A_i, stopped at stabilization. Every term is invariant
// under all automorphisms because it is built from characteristic data only.
struct DescentChain {
  std::vector<QMatrix> terms;  // terms[0] is the full space, rref bases
  const QMatrix& stable() const { return terms.back(); }
  std::vector<std::size_t> dims() const;
};
DescentChain second_center_descent(const LieAlgebra& g);

// True when the second center of the positive-root algebra is exactly the
// span of the basis vectors indexed by RootSystem::z2_root_set(). Holds for
// every type because the bracket is graded with injective targets.
bool z2_spans_second_center(const GradedBasis& nb);

// Kernel sweep: V starts as all of g; every basis vector w with
// [w,[w,V]] = 0 and [w,V] != 0 cuts V down to its overlap with ker(ad w).
// The fixpoint contains the intersection of ker(ad w) over all square-zero
// w, and that intersection always contains the center, so bound == center
// pins it exactly.
struct SweepStep {
  std::size_t witness;  // basis index that fired
  std::size_t dim_after;
};
struct SweepResult {
  QMatrix bound;
  std::vector<SweepStep> trace;
  bool exact_center = false;  // bound equals the center of g
};
SweepResult square_zero_sweep(const LieAlgebra& g);

// One coordinate shrink: look for the first basis witness x_i with
// [x_i,[x_i, x_j]] = 0 for all j in j_set, at least one nonzero [x_i, x_m]
// with m in j_set, each such bracket a multiple of a single basis vector,
// and all those target indices distinct. The rule ejects exactly the
// indices in `removed` from the set.
struct GradedShrinkStep {
  std::size_t witness;
  std::vector<std::size_t> removed;
};
std::optional<GradedShrinkStep> graded_shrink_step(const LieAlgebra& g,
                                                   const std::vector<std::size_t>& j_set);

// Iterate graded_shrink_step on the positive-root algebra of type t starting
// from the full index set, aiming at the highest root line. Types whose
// sweep provably stabilizes strictly above the highest root line (family C,
// and B2 which carries the same algebra as C2) are refused.
struct ShrinkChainResult {
  bool refused = false;
  std::string reason;
  std::vector<GradedShrinkStep> steps;
  std::vector<std::size_t> final_set;
  bool reached_highest_line = false;
};
ShrinkChainResult highest_root_reduction(RootType t);

// Span of the symmetric positive roots e_i + e_j and 2e_i of a type C
// algebra: an abelian ideal of dimension n(n+1)/2, maximal abelian exactly
// when its full centralizer is itself.
struct TypeCIdeal {
  QMatrix subspace;
  std::vector<std::size_t> root_indices;
  bool abelian = false;
  bool ideal = false;
  bool maximal_abelian = false;
};
TypeCIdeal type_c_abelian_ideal(const GradedBasis& nb);

// Rational grid scan: enumerate witness vectors with coordinates in
// [-radius, radius] (radius 2 when the budget allows, else 1), keep those
// with ad(w)^2 = 0 and ad(w) != 0, and report every candidate row that some
// witness fails to annihilate. No violations means no grid witness can cut
// the candidate any further. Requires small integer structure constants.
struct GridViolation {
  std::vector<long> witness;
  std::size_t candidate_row;
};
struct GridScan {
  long radius = 0;
  unsigned long long samples = 0;
  unsigned long long square_zero_witnesses = 0;
  std::vector<GridViolation> violations;  // capped at 16 entries
};
GridScan square_zero_grid_scan(const LieAlgebra& g, const QMatrix& candidate,
                               unsigned long long budget = 10'000'000);

// Exhaustive scan over F_p: intersect ker(ad w) over every square-zero
// witness w in F_p^dim (one representative per line) and compare with the
// candidate reduced mod p. Throws when p divides a denominator of the
// structure constants or of the candidate, or when p^dim exceeds the budget.
struct ModPScan {
  long prime = 0;
  unsigned long long square_zero_witnesses = 0;
  std::size_t swept_dim = 0;
  bool matches_candidate = false;
};
ModPScan square_zero_mod_p_scan(const LieAlgebra& g, const QMatrix& candidate, long prime,
                                unsigned long long budget = 10'000'000);

}  // namespace nilchar
