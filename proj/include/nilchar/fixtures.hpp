#pragma once

#include <string>
#include <vector>

#include "nilchar/lie_algebra.hpp"

namespace nilchar {

// Named example algebras used by the CLI and the verification suites.
//
//   example-6d          six-dimensional class-5 algebra whose characteristic
//                       subalgebras were worked out by hand
//   heisenberg          three-dimensional Heisenberg algebra
//   filiform-<n>        standard filiform algebra of dimension n >= 3
//   c2-presentation     the rank-2 symplectic positive-root algebra in a
//                       scrambled basis (tests basis independence)
//   upper-triangular-<n>  strictly upper triangular n x n matrices
//   nplus-<type>        positive-root algebra of a simple type ("nplus-B3")
LieAlgebra builtin_algebra(const std::string& name);
std::vector<std::string> builtin_names();

// The same algebra written in the basis c_i * b_i. Factors must be nonzero
// and match the dimension. Invariant dimensions must not change under this.
LieAlgebra rescaled_basis(const LieAlgebra& g, const std::vector<Rational>& factors);

// The same algebra with basis order b_{perm[0]}, b_{perm[1]}, ...
// perm must be a permutation of 0..dim-1.
LieAlgebra permuted_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm);

}  // namespace nilchar
