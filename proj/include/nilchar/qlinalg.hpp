// Exact linear algebra over Q: vectors, row-major matrices, reduced row
// echelon form, kernels, and row-space intersection. Subspaces are always
// carried around as rref matrices with zero rows dropped, so equality of
// subspaces is plain equality of representations.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilchar/rational.hpp"

namespace nilchar {

using QVector = std::vector<Rational>;

struct QVectorHash {
  std::size_t operator()(const QVector& v) const {
    std::size_t h = 14695981039346656037ULL;
    for (const auto& x : v) h = (h ^ x.hash_value()) * 1099511628211ULL;
    return h;
  }
};

// Entrywise lexicographic order; the fixed total order used for roots.
bool lex_less(const QVector& a, const QVector& b);

bool is_zero_vector(const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);
QVector zero_vector(std::size_t n);
std::string vector_str(const QVector& v);

class QMatrix {
public:
  QMatrix() : cols_(0) {}
  explicit QMatrix(std::size_t cols) : cols_(cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::size_t cols, std::vector<QVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  void push_row(QVector row);
  void append_rows(const QMatrix& other);
  QVector& row(std::size_t i) { return rows_[i]; }
  const QVector& row(std::size_t i) const { return rows_[i]; }
  Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

private:
  std::size_t cols_;
  std::vector<QVector> rows_;
};

// Unique reduced row echelon form; zero rows removed, pivots are 1 and are
// the only nonzero entries in their columns.
QMatrix rref(QMatrix m);

std::size_t rank(const QMatrix& m);

// Basis of {x : m x = 0}, returned in rref. rank(m) + rows(kernel) == cols(m).
QMatrix kernel(const QMatrix& m);

// Intersection of the two row spaces, in rref. Throws std::invalid_argument
// on ambient dimension mismatch.
QMatrix intersect(const QMatrix& a, const QMatrix& b);

// Sum of the two row spaces, in rref. Same mismatch behavior as intersect.
QMatrix span_sum(const QMatrix& a, const QMatrix& b);

// Residual of v after eliminating against the rows of an rref matrix. Zero
// residual means v lies in the row space.
QVector reduce_against(const QMatrix& rref_basis, const QVector& v);
bool in_row_space(const QMatrix& rref_basis, const QVector& v);

// a's row space contains b's. Both arguments may be arbitrary matrices.
bool row_space_contains(const QMatrix& a, const QMatrix& b);
bool same_row_space(const QMatrix& a, const QMatrix& b);

}  // namespace nilchar
