// Positive-root nilpotent algebras of the split simple types: concrete
// matrix realizations for the classical families, integer structure
// constants with extraspecial-pair signs for every type, and the strictly
// upper triangular matrix algebra.
#pragma once

#include <cstddef>
#include <optional>

#include "nilchar/lie_algebra.hpp"
#include "nilchar/root_system.hpp"

namespace nilchar {

// Nilpotent Lie algebra with one basis vector per positive root, indices
// matching RootSystem::positive(); every bracket [x_i, x_j] is a scalar
// multiple of the basis vector at sum_index(i, j).
struct GradedBasis {
  RootSystem roots;
  LieAlgebra algebra;

  std::size_t dim() const { return algebra.dim(); }

  // Basis index of [x_i, x_j] when the bracket is nonzero.
  std::optional<std::size_t> bracket_target(std::size_t i, std::size_t j) const;
  // Coefficient c with [x_i, x_j] = c * x_{bracket_target(i, j)}, zero when
  // the bracket vanishes.
  Rational bracket_coeff(std::size_t i, std::size_t j) const;
};

// Span of the positive root spaces of the split simple algebra of type t in
// its concrete coordinate realization. Classical families are realized by
// strictly upper triangular matrices (type A inside gl(n+1); types B, C, D
// as the upper part of the matrices annihilating an antidiagonal bilinear
// form), each root vector normalized so its first nonzero entry in row-major
// order is 1. Exceptional families delegate to build_nplus_chevalley.
GradedBasis build_nplus(RootType t);

// Same algebra with the Chevalley normalization: every structure constant
// N(alpha, beta) is an integer of magnitude p + 1, where p is the number of
// times alpha can be subtracted from beta inside the root system, and the
// signs are fixed by making N positive on the extraspecial pairs of the
// height-then-lex root order. Available for all types.
GradedBasis build_nplus_chevalley(RootType t);

// Strictly upper triangular n-by-n matrices over Q with the commutator
// bracket, basis E_ij in row-major order, n >= 2.
LieAlgebra upper_triangular(std::size_t n);

}  // namespace nilchar
