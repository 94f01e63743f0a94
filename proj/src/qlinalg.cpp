#include "nilchar/qlinalg.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace nilchar {

bool lex_less(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVector scale(const Rational& c, const QVector& v) {
  QVector r(v);
  for (auto& x : r) x *= c;
  return r;
}

QVector zero_vector(std::size_t n) { return QVector(n, Rational(0)); }

std::string vector_str(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    QVector row = zero_vector(n);
    row[i] = Rational(1);
    m.push_row(std::move(row));
  }
  return m;
}

QMatrix QMatrix::from_rows(std::size_t cols, std::vector<QVector> rows) {
  QMatrix m(cols);
  for (auto& r : rows) m.push_row(std::move(r));
  return m;
}

void QMatrix::push_row(QVector row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  rows_.push_back(std::move(row));
}

void QMatrix::append_rows(const QMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  for (std::size_t i = 0; i < other.rows(); ++i) rows_.push_back(other.row(i));
}

QMatrix rref(QMatrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && m.at(piv, c).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != r) std::swap(m.row(piv), m.row(r));
    const Rational inv = Rational(1) / m.at(r, c);
    if (!inv.is_one())
      for (std::size_t j = c; j < nc; ++j)
        if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      const Rational f = m.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < nc; ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  QMatrix out(nc);
  for (std::size_t i = 0; i < r; ++i) out.push_row(std::move(m.row(i)));
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rows(); }

QMatrix kernel(const QMatrix& m) {
  const std::size_t nc = m.cols();
  // Scaling a constraint row or repeating it does not change the null space,
  // so normalize every row by its first nonzero entry and drop duplicates
  // before eliminating. Stacked ad-constraint matrices repeat rows heavily
  // and this collapses them ahead of the expensive rref.
  QMatrix dedup(nc);
  std::unordered_set<QVector, QVectorHash> seen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    QVector row = m.row(i);
    std::size_t c = 0;
    while (c < nc && row[c].is_zero()) ++c;
    if (c == nc) continue;
    const Rational lead = row[c];
    for (std::size_t k = c; k < nc; ++k) row[k] /= lead;
    if (seen.insert(row).second) dedup.push_row(std::move(row));
  }
  QMatrix r = rref(std::move(dedup));
  std::vector<std::size_t> pivot_col(r.rows());
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < nc && r.at(i, c).is_zero()) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  QMatrix out(nc);
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    QVector v = zero_vector(nc);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = -r.at(i, f);
    out.push_row(std::move(v));
  }
  assert(r.rows() + out.rows() == nc);
  return rref(std::move(out));
}

QMatrix intersect(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("ambient dimension mismatch in intersect");
  QMatrix stacked = kernel(a);
  stacked.append_rows(kernel(b));
  return kernel(stacked);
}

QMatrix span_sum(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("ambient dimension mismatch in span_sum");
  QMatrix stacked = a;
  stacked.append_rows(b);
  return rref(std::move(stacked));
}

QVector reduce_against(const QMatrix& rref_basis, const QVector& v) {
  if (v.size() != rref_basis.cols())
    throw std::invalid_argument("vector dimension mismatch in reduce_against");
  QVector r = v;
  for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < r.size() && rref_basis.at(i, c).is_zero()) ++c;
    if (c == r.size() || r[c].is_zero()) continue;
    const Rational f = r[c];
    for (std::size_t j = c; j < r.size(); ++j)
      if (!rref_basis.at(i, j).is_zero()) r[j] -= f * rref_basis.at(i, j);
  }
  return r;
}

bool in_row_space(const QMatrix& rref_basis, const QVector& v) {
  return is_zero_vector(reduce_against(rref_basis, v));
}

bool row_space_contains(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("ambient dimension mismatch in containment");
  QMatrix ar = rref(a);
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!in_row_space(ar, b.row(i))) return false;
  return true;
}

bool same_row_space(const QMatrix& a, const QMatrix& b) {
  return rref(a) == rref(b);
}

}  // namespace nilchar
