// Finite-dimensional nilpotent Lie algebras over Q, presented by sparse
// structure constants on basis pairs (i, j) with i < j. Construction checks
// the Jacobi identity on every basis triple and nilpotency via the lower
// central series unless deferred checking is requested. Subspaces are rref
// matrices in ambient coordinates throughout.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilchar/qlinalg.hpp"

namespace nilchar {

// Sorted by index, zero coefficients dropped.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

struct LieAlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JacobiError : LieAlgebraError {
  JacobiError(std::string msg, std::size_t i_, std::size_t j_, std::size_t k_)
      : LieAlgebraError(std::move(msg)), i(i_), j(j_), k(k_) {}
  std::size_t i, j, k;
};

struct NotNilpotentError : LieAlgebraError {
  NotNilpotentError(std::string msg, std::size_t term_, std::size_t dim_)
      : LieAlgebraError(std::move(msg)), term(term_), stabilized_dim(dim_) {}
  std::size_t term, stabilized_dim;
};

struct JacobiViolation {
  std::size_t i, j, k;
  QVector residual;
};

enum class CheckPolicy { Strict, Deferred };

class LieAlgebra {
public:
  // labels may be empty (then x1..xn). Throws std::invalid_argument on
  // malformed constants, JacobiError / NotNilpotentError under Strict.
  static LieAlgebra from_constants(std::size_t dim, std::vector<std::string> labels,
                                   const StructureConstants& constants,
                                   CheckPolicy policy = CheckPolicy::Strict);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& constants() const { return constants_; }

  QVector bracket(const QVector& x, const QVector& y) const;
  // [b_i, v]; sign handled for any index pair.
  QVector bracket_with_basis(std::size_t i, const QVector& v) const;
  // [b_i, b_j] as a sparse vector.
  SparseVec basis_bracket(std::size_t i, std::size_t j) const;

  std::vector<JacobiViolation> jacobi_check() const;
  std::size_t nilpotency_class() const;

  QMatrix center() const;
  // Ascending chain Z_1 < Z_2 < ... ending at the whole algebra; pass
  // max_terms > 0 to stop early.
  std::vector<QMatrix> upper_central_series(std::size_t max_terms = 0) const;
  // {x in `inside` : [x, h] = 0 for all h in `of`}.
  QMatrix centralizer(const QMatrix& inside, const QMatrix& of) const;
  QMatrix full_space() const { return QMatrix::identity(dim_); }

  bool is_ideal(const QMatrix& s) const;
  bool is_abelian(const QMatrix& s) const;
  bool is_subalgebra(const QMatrix& s) const;

  // The algebra induced on a bracket-closed subspace, with the rref rows of
  // `subspace` as its basis. Throws std::invalid_argument if not closed.
  // Jacobi and nilpotency are inherited from the enclosing algebra, so
  // callers on a hot path may pass Deferred to skip re-verifying them.
  LieAlgebra restricted_to(const QMatrix& subspace,
                           CheckPolicy policy = CheckPolicy::Strict) const;

  // Matrix M with M[k][i] = coefficient of b_k in [b_i, x]... rows indexed by
  // output coordinate, so kernel(M) = {v : [v, x] = 0}.
  QMatrix ad_constraint_matrix(const QVector& x) const;

  static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  StructureConstants constants_;
  std::vector<std::vector<SparseVec>> table_;  // upper triangle, [i][j] for i<j
  mutable std::optional<std::size_t> class_;

  std::size_t lower_central_length() const;
};

// Rows of `sub` are coordinates w.r.t. the rows of `frame`; returns the same
// subspace expressed in frame's ambient coordinates, in rref.
QMatrix lift_through(const QMatrix& frame, const QMatrix& sub);

}  // namespace nilchar
