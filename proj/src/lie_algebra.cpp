#include "nilchar/lie_algebra.hpp"

#include <algorithm>

namespace nilchar {

namespace {

void accumulate(QVector& acc, const Rational& c, const SparseVec& v) {
  for (const auto& [k, coeff] : v) acc[k] += c * coeff;
}

SparseVec to_sparse(const QVector& v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.emplace_back(k, v[k]);
  return out;
}

QMatrix drop_zero_rows(const QMatrix& m) {
  QMatrix out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!is_zero_vector(m.row(i))) out.push_row(m.row(i));
  return out;
}

}  // namespace

LieAlgebra LieAlgebra::from_constants(std::size_t dim, std::vector<std::string> labels,
                                      const StructureConstants& constants,
                                      CheckPolicy policy) {
  LieAlgebra g;
  g.dim_ = dim;
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  if (labels.size() != dim)
    throw std::invalid_argument("label count does not match dimension");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("basis labels must be unique");
  }
  g.labels_ = std::move(labels);

  g.table_.assign(dim, {});
  for (std::size_t i = 0; i < dim; ++i) g.table_[i].assign(dim, {});
  for (const auto& [key, vec] : constants) {
    const auto [i, j] = key;
    if (i >= j)
      throw std::invalid_argument("structure constant key must have i < j, got (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
    if (j >= dim) throw std::invalid_argument("structure constant index out of range");
    SparseVec cleaned;
    for (const auto& [k, c] : vec) {
      if (k >= dim) throw std::invalid_argument("structure constant target out of range");
      if (!c.is_zero()) cleaned.emplace_back(k, c);
    }
    std::sort(cleaned.begin(), cleaned.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 0; t + 1 < cleaned.size(); ++t)
      if (cleaned[t].first == cleaned[t + 1].first)
        throw std::invalid_argument("duplicate target index in structure constant");
    if (cleaned.empty()) continue;
    g.constants_[key] = cleaned;
    g.table_[i][j] = std::move(cleaned);
  }

  if (policy == CheckPolicy::Strict) {
    auto bad = g.jacobi_check();
    if (!bad.empty()) {
      const auto& v = bad.front();
      throw JacobiError("Jacobi identity fails on (" + g.labels_[v.i] + ", " +
                            g.labels_[v.j] + ", " + g.labels_[v.k] +
                            "), residual " + vector_str(v.residual),
                        v.i, v.j, v.k);
    }
    g.lower_central_length();
  }
  return g;
}

SparseVec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) return table_[i][j];
  SparseVec out = table_[j][i];
  for (auto& [k, c] : out) c = -c;
  return out;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("vector dimension mismatch in bracket");
  std::vector<std::size_t> xs, ys;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i].is_zero()) xs.push_back(i);
    if (!y[i].is_zero()) ys.push_back(i);
  }
  QVector acc = zero_vector(dim_);
  for (std::size_t i : xs)
    for (std::size_t j : ys) {
      if (i == j) continue;
      if (i < j) {
        if (!table_[i][j].empty()) accumulate(acc, x[i] * y[j], table_[i][j]);
      } else if (!table_[j][i].empty()) {
        accumulate(acc, -(x[i] * y[j]), table_[j][i]);
      }
    }
  return acc;
}

QVector LieAlgebra::bracket_with_basis(std::size_t i, const QVector& v) const {
  QVector acc = zero_vector(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (v[j].is_zero() || j == i) continue;
    if (i < j) {
      accumulate(acc, v[j], table_[i][j]);
    } else {
      accumulate(acc, -v[j], table_[j][i]);
    }
  }
  return acc;
}

std::vector<JacobiViolation> LieAlgebra::jacobi_check() const {
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = j + 1; k < dim_; ++k) {
        QVector acc = zero_vector(dim_);
        for (const auto& [t, c] : table_[j][k]) accumulate(acc, c, basis_bracket(i, t));
        for (const auto& [t, c] : basis_bracket(k, i)) accumulate(acc, c, basis_bracket(j, t));
        for (const auto& [t, c] : table_[i][j]) accumulate(acc, c, basis_bracket(k, t));
        if (!is_zero_vector(acc)) out.push_back({i, j, k, acc});
      }
    }
  return out;
}

std::size_t LieAlgebra::lower_central_length() const {
  QMatrix term = QMatrix::identity(dim_);
  std::size_t k = 1;
  while (term.rows() > 0) {
    QMatrix next(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t r = 0; r < term.rows(); ++r) {
        QVector w = bracket_with_basis(i, term.row(r));
        if (!is_zero_vector(w)) next.push_row(std::move(w));
      }
    next = rref(std::move(next));
    if (next.rows() == term.rows())
      throw NotNilpotentError("algebra is not nilpotent: lower central series stabilizes at term " +
                                  std::to_string(k + 1) + " with dimension " +
                                  std::to_string(next.rows()),
                              k + 1, next.rows());
    term = std::move(next);
    if (term.rows() == 0) break;
    ++k;
  }
  class_ = k;
  return k;
}

std::size_t LieAlgebra::nilpotency_class() const {
  if (!class_) lower_central_length();
  return *class_;
}

QMatrix LieAlgebra::ad_constraint_matrix(const QVector& x) const {
  QMatrix m(dim_);
  std::vector<QVector> rows(dim_, zero_vector(dim_));
  for (const auto& [key, vec] : constants_) {
    const auto [i, j] = key;
    // [b_i, x] picks up x_j * c_ij; [b_j, x] picks up -x_i * c_ij.
    if (!x[j].is_zero())
      for (const auto& [k, c] : vec) rows[k][i] += c * x[j];
    if (!x[i].is_zero())
      for (const auto& [k, c] : vec) rows[k][j] -= c * x[i];
  }
  for (auto& r : rows) m.push_row(std::move(r));
  return m;
}

QMatrix LieAlgebra::center() const {
  QMatrix constraints(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    QVector unit = zero_vector(dim_);
    unit[j] = Rational(1);
    constraints.append_rows(drop_zero_rows(ad_constraint_matrix(unit)));
  }
  return kernel(constraints);
}

std::vector<QMatrix> LieAlgebra::upper_central_series(std::size_t max_terms) const {
  std::vector<QMatrix> chain;
  QMatrix current = center();
  chain.push_back(current);
  while (current.rows() < dim_) {
    if (max_terms && chain.size() >= max_terms) break;
    // Next term: x with every [x, b_j] falling inside the current term.
    QMatrix constraints(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::vector<QVector> rows(dim_, zero_vector(dim_));
      bool any = false;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (i == j) continue;
        SparseVec br = basis_bracket(i, j);
        if (br.empty()) continue;
        QVector dense = zero_vector(dim_);
        accumulate(dense, Rational(1), br);
        QVector resid = reduce_against(current, dense);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!resid[k].is_zero()) {
            rows[k][i] = resid[k];
            any = true;
          }
      }
      if (any) constraints.append_rows(drop_zero_rows(QMatrix::from_rows(dim_, rows)));
    }
    QMatrix next = kernel(constraints);
    if (next.rows() <= current.rows())
      throw LieAlgebraError("upper central series failed to ascend");
    chain.push_back(next);
    current = std::move(next);
  }
  return chain;
}

QMatrix LieAlgebra::centralizer(const QMatrix& inside, const QMatrix& of) const {
  if (inside.cols() != dim_ || of.cols() != dim_)
    throw std::invalid_argument("subspace ambient dimension mismatch in centralizer");
  QMatrix constraints(dim_);
  for (std::size_t r = 0; r < of.rows(); ++r)
    constraints.append_rows(drop_zero_rows(ad_constraint_matrix(of.row(r))));
  QMatrix commuting = kernel(constraints);
  return intersect(commuting, rref(inside));
}

bool LieAlgebra::is_ideal(const QMatrix& s) const {
  QMatrix r = rref(s);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < r.rows(); ++k)
      if (!in_row_space(r, bracket_with_basis(i, r.row(k)))) return false;
  return true;
}

bool LieAlgebra::is_abelian(const QMatrix& s) const {
  for (std::size_t a = 0; a < s.rows(); ++a)
    for (std::size_t b = a + 1; b < s.rows(); ++b)
      if (!is_zero_vector(bracket(s.row(a), s.row(b)))) return false;
  return true;
}

bool LieAlgebra::is_subalgebra(const QMatrix& s) const {
  QMatrix r = rref(s);
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = a + 1; b < r.rows(); ++b)
      if (!in_row_space(r, bracket(r.row(a), r.row(b)))) return false;
  return true;
}

LieAlgebra LieAlgebra::restricted_to(const QMatrix& subspace, CheckPolicy policy) const {
  QMatrix basis = rref(subspace);
  const std::size_t d = basis.rows();
  std::vector<std::size_t> pivot(d);
  for (std::size_t r = 0; r < d; ++r) {
    std::size_t c = 0;
    while (c < dim_ && basis.at(r, c).is_zero()) ++c;
    pivot[r] = c;
  }
  StructureConstants constants;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      QVector w = bracket(basis.row(a), basis.row(b));
      if (is_zero_vector(w)) continue;
      // Coordinates fall out of the pivot columns because basis is rref.
      SparseVec coords;
      QVector check = w;
      for (std::size_t r = 0; r < d; ++r) {
        const Rational& c = w[pivot[r]];
        if (c.is_zero()) continue;
        coords.emplace_back(r, c);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!basis.at(r, k).is_zero()) check[k] -= c * basis.at(r, k);
      }
      if (!is_zero_vector(check))
        throw std::invalid_argument("subspace is not closed under the bracket");
      constants[{a, b}] = std::move(coords);
    }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < d; ++r) {
    SparseVec nz = to_sparse(basis.row(r));
    std::string cand;
    if (nz.size() == 1 && nz[0].second.is_one())
      cand = labels_[nz[0].first];
    else
      cand = "s" + std::to_string(r + 1);
    while (std::find(labels.begin(), labels.end(), cand) != labels.end()) cand += "'";
    labels.push_back(cand);
  }
  return from_constants(d, std::move(labels), constants, policy);
}

LieAlgebra LieAlgebra::direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  StructureConstants constants = a.constants_;
  for (const auto& [key, vec] : b.constants_) {
    SparseVec shifted = vec;
    for (auto& [k, c] : shifted) k += a.dim_;
    constants[{key.first + a.dim_, key.second + a.dim_}] = std::move(shifted);
  }
  std::vector<std::string> labels = a.labels_;
  for (const auto& l : b.labels_) {
    std::string cand = l;
    while (std::find(labels.begin(), labels.end(), cand) != labels.end()) cand += "'";
    labels.push_back(cand);
  }
  return from_constants(a.dim_ + b.dim_, std::move(labels), constants);
}

QMatrix lift_through(const QMatrix& frame, const QMatrix& sub) {
  if (sub.cols() != frame.rows())
    throw std::invalid_argument("frame row count does not match sub ambient dimension");
  QMatrix out(frame.cols());
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    QVector v = zero_vector(frame.cols());
    for (std::size_t j = 0; j < sub.cols(); ++j) {
      if (sub.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < frame.cols(); ++k)
        if (!frame.at(j, k).is_zero()) v[k] += sub.at(i, j) * frame.at(j, k);
    }
    out.push_row(std::move(v));
  }
  return rref(std::move(out));
}

}  // namespace nilchar
