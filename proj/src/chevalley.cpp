#include "nilchar/chevalley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilchar {

namespace {

std::vector<std::string> root_labels(const RootSystem& rs) {
  std::vector<std::string> labels;
  labels.reserve(rs.positive_count());
  for (std::size_t i = 0; i < rs.positive_count(); ++i) labels.push_back(rs.root_name(i));
  return labels;
}

// A classical split simple algebra sits inside gl(N) as the matrices X with
// X^T M + M X = 0 for an antidiagonal form M (no form at all for type A);
// the diagonal Cartan acts on the matrix entry at (r, c) by the weight
// row_weight[r] - row_weight[c].
struct Realization {
  std::size_t size = 0;
  std::vector<QVector> row_weight;
  std::vector<Rational> form;  // antidiagonal entries of M, empty for type A
};

Realization classical_realization(const RootSystem& rs) {
  const std::size_t n = static_cast<std::size_t>(rs.type().rank);
  const std::size_t amb = rs.ambient_dim();
  Realization re;
  auto weight = [&](std::size_t coord, long sgn) {
    QVector w = zero_vector(amb);
    w[coord] = Rational(sgn);
    return w;
  };
  switch (rs.type().family) {
    case RootFamily::A:
      re.size = n + 1;
      for (std::size_t r = 0; r < re.size; ++r) re.row_weight.push_back(weight(r, 1));
      break;
    case RootFamily::B:
      re.size = 2 * n + 1;
      for (std::size_t r = 0; r < n; ++r) re.row_weight.push_back(weight(r, 1));
      re.row_weight.push_back(zero_vector(amb));
      for (std::size_t r = n + 1; r <= 2 * n; ++r)
        re.row_weight.push_back(weight(2 * n - r, -1));
      re.form.assign(re.size, Rational(1));
      break;
    case RootFamily::C:
    case RootFamily::D:
      re.size = 2 * n;
      for (std::size_t r = 0; r < n; ++r) re.row_weight.push_back(weight(r, 1));
      for (std::size_t r = n; r < 2 * n; ++r)
        re.row_weight.push_back(weight(2 * n - 1 - r, -1));
      if (rs.type().family == RootFamily::C) {
        re.form.assign(re.size, Rational(1));
        for (std::size_t a = n; a < 2 * n; ++a) re.form[a] = Rational(-1);
      } else {
        re.form.assign(re.size, Rational(1));
      }
      break;
    default:
      throw std::logic_error("internal: matrix realization requested for an exceptional type");
  }
  return re;
}

using SparseMat = std::map<std::pair<std::size_t, std::size_t>, Rational>;

SparseMat commutator(const SparseMat& a, const SparseMat& b) {
  SparseMat out;
  for (const auto& [pa, va] : a)
    for (const auto& [pb, vb] : b) {
      if (pa.second == pb.first) out[{pa.first, pb.second}] += va * vb;
      if (pb.second == pa.first) out[{pb.first, pa.second}] -= vb * va;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LieAlgebra matrix_nplus(const RootSystem& rs) {
  const Realization re = classical_realization(rs);
  const std::size_t N = re.size;

  std::vector<std::pair<std::size_t, std::size_t>> pos;  // strictly upper, row-major
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos_idx;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = r + 1; c < N; ++c) {
      pos_idx[{r, c}] = pos.size();
      pos.emplace_back(r, c);
    }

  QMatrix basis(pos.size());
  if (re.form.empty()) {
    basis = QMatrix::identity(pos.size());
  } else {
    // (X^T M + M X)_{ab} = m_{s(b)} X_{s(b),a} + m_a X_{s(a),b} with
    // s(k) = N-1-k; keep only the strictly upper variables.
    auto s = [N](std::size_t k) { return N - 1 - k; };
    QMatrix cons(pos.size());
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        QVector row = zero_vector(pos.size());
        if (s(b) < a) row[pos_idx[{s(b), a}]] += re.form[s(b)];
        if (s(a) < b) row[pos_idx[{s(a), b}]] += re.form[a];
        if (!is_zero_vector(row)) cons.push_row(std::move(row));
      }
    basis = kernel(cons);
  }
  if (basis.rows() != rs.positive_count())
    throw std::logic_error("internal: matrix realization has the wrong root space count");

  // Each solution is supported on a single weight; match it to its root.
  std::vector<SparseMat> mat(rs.positive_count());
  std::vector<bool> seen(rs.positive_count(), false);
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    SparseMat m;
    std::optional<QVector> wt;
    for (std::size_t p = 0; p < pos.size(); ++p) {
      const Rational& v = basis.at(k, p);
      if (v.is_zero()) continue;
      QVector w = sub(re.row_weight[pos[p].first], re.row_weight[pos[p].second]);
      if (!wt)
        wt = std::move(w);
      else if (*wt != w)
        throw std::logic_error("internal: root vector mixes weights");
      m[pos[p]] = v;
    }
    if (!wt) throw std::logic_error("internal: zero root vector");
    auto idx = rs.positive_index(*wt);
    if (!idx) throw std::logic_error("internal: weight is not a positive root");
    if (seen[*idx]) throw std::logic_error("internal: duplicate root space");
    seen[*idx] = true;
    mat[*idx] = std::move(m);
  }

  StructureConstants constants;
  for (std::size_t i = 0; i < rs.positive_count(); ++i)
    for (std::size_t j = i + 1; j < rs.positive_count(); ++j) {
      SparseMat c = commutator(mat[i], mat[j]);
      auto k = rs.sum_index(i, j);
      if (!k) {
        if (!c.empty())
          throw std::logic_error("internal: bracket escaped the root grading");
        continue;
      }
      // mat[*k] is normalized with leading entry 1, so the coefficient can be
      // read off there; the rest of the commutator must then match exactly.
      auto lead = mat[*k].begin();
      auto it = c.find(lead->first);
      if (it == c.end())
        throw std::logic_error("internal: bracket of adjacent root spaces vanished");
      Rational coeff = it->second / lead->second;
      SparseMat expect = mat[*k];
      for (auto& [p, v] : expect) v *= coeff;
      if (expect != c)
        throw std::logic_error("internal: bracket is not a multiple of the target root vector");
      constants[{i, j}] = {{*k, std::move(coeff)}};
    }
  return LieAlgebra::from_constants(rs.positive_count(), root_labels(rs), std::move(constants));
}

LieAlgebra chevalley_nplus(const RootSystem& rs) {
  const std::size_t P = rs.positive_count();
  const auto& roots = rs.positive();

  // Simple roots: the positive roots that are not sums of two positive roots.
  std::vector<bool> is_sum(P, false);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = i + 1; j < P; ++j)
      if (auto k = rs.sum_index(i, j)) is_sum[*k] = true;
  std::vector<std::size_t> simples;
  for (std::size_t i = 0; i < P; ++i)
    if (!is_sum[i]) simples.push_back(i);
  if (simples.size() != static_cast<std::size_t>(rs.type().rank))
    throw std::logic_error("internal: simple root count does not match the rank");

  // Heights: every non-simple positive root drops to another positive root
  // after subtracting some simple root, and height is linear.
  std::vector<std::size_t> height(P, 0);
  for (std::size_t s : simples) height[s] = 1;
  for (bool missing = true; missing;) {
    missing = false;
    bool progress = false;
    for (std::size_t i = 0; i < P; ++i) {
      if (height[i] != 0) continue;
      for (std::size_t s : simples) {
        auto j = rs.positive_index(sub(roots[i], roots[s]));
        if (j && height[*j] != 0) {
          height[i] = height[*j] + 1;
          progress = true;
          break;
        }
      }
      if (height[i] == 0) missing = true;
    }
    if (missing && !progress)
      throw std::logic_error("internal: height recursion is stuck");
  }

  // Total order: by height, ties broken by the lex order of the roots.
  std::vector<std::size_t> order(P);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return height[a] != height[b] ? height[a] < height[b] : a < b;
  });
  std::vector<std::size_t> rankpos(P);
  for (std::size_t r = 0; r < P; ++r) rankpos[order[r]] = r;

  // p(a, b): how many times root a can be subtracted from root b.
  auto pval = [&](std::size_t a, std::size_t b) {
    std::size_t p = 0;
    QVector v = sub(roots[b], roots[a]);
    while (rs.is_root(v)) {
      ++p;
      if (p > 8) throw std::logic_error("internal: runaway root string");
      v = sub(v, roots[a]);
    }
    return p;
  };

  std::map<std::pair<std::size_t, std::size_t>, Rational> N;
  auto nsign = [&](std::size_t a, std::size_t b) {
    return rankpos[a] < rankpos[b] ? N.at({a, b}) : Rational(-1) * N.at({b, a});
  };
  // N(root a, minus root b), reduced to pairs whose sum has smaller height.
  auto nmixed = [&](std::size_t a, std::size_t b) {
    QVector d = sub(roots[a], roots[b]);
    if (!rs.is_root(d)) return Rational(0);
    Rational d2 = rs.inner(d, d);
    if (auto di = rs.positive_index(d))
      return Rational(-1) * d2 / rs.inner(roots[a], roots[a]) * nsign(b, *di);
    auto di = rs.positive_index(sub(roots[b], roots[a]));
    if (!di) throw std::logic_error("internal: root difference lost its sign");
    return d2 / rs.inner(roots[b], roots[b]) * nsign(*di, a);
  };

  // Work upward through the order; for each root fix the extraspecial pair
  // to +(p+1) and propagate to the remaining special pairs.
  for (std::size_t r = 0; r < P; ++r) {
    const std::size_t g = order[r];
    if (height[g] == 1) continue;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < P; ++a) {
      auto b = rs.positive_index(sub(roots[g], roots[a]));
      if (b && rankpos[a] < rankpos[*b]) pairs.emplace_back(a, *b);
    }
    if (pairs.empty()) throw std::logic_error("internal: non-simple root with no special pair");
    std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
      return rankpos[x.first] < rankpos[y.first];
    });
    const auto [ea, eb] = pairs.front();
    N[{ea, eb}] = Rational(static_cast<long>(pval(ea, eb) + 1));
    for (std::size_t q = 1; q < pairs.size(); ++q) {
      const auto [xi, eta] = pairs[q];
      Rational acc(0);
      QVector bmx = sub(roots[eb], roots[xi]);
      if (rs.is_root(bmx)) acc += nmixed(eb, xi) * nmixed(ea, eta) / rs.inner(bmx, bmx);
      QVector amx = sub(roots[ea], roots[xi]);
      if (rs.is_root(amx)) acc -= nmixed(ea, xi) * nmixed(eb, eta) / rs.inner(amx, amx);
      Rational val = rs.inner(roots[g], roots[g]) * acc / N.at({ea, eb});
      Rational want(static_cast<long>(pval(xi, eta) + 1));
      if (val != want && val != Rational(-1) * want)
        throw std::logic_error("internal: structure constant breaks the root string rule");
      N[{xi, eta}] = std::move(val);
    }
  }

  StructureConstants constants;
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = i + 1; j < P; ++j)
      if (auto k = rs.sum_index(i, j)) constants[{i, j}] = {{*k, nsign(i, j)}};
  return LieAlgebra::from_constants(P, root_labels(rs), std::move(constants));
}

}  // namespace

std::optional<std::size_t> GradedBasis::bracket_target(std::size_t i, std::size_t j) const {
  if (i == j) return std::nullopt;
  auto it = algebra.constants().find({std::min(i, j), std::max(i, j)});
  if (it == algebra.constants().end() || it->second.empty()) return std::nullopt;
  return it->second.front().first;
}

Rational GradedBasis::bracket_coeff(std::size_t i, std::size_t j) const {
  if (i == j) return Rational(0);
  auto it = algebra.constants().find({std::min(i, j), std::max(i, j)});
  if (it == algebra.constants().end() || it->second.empty()) return Rational(0);
  const Rational& c = it->second.front().second;
  return i < j ? c : Rational(-1) * c;
}

GradedBasis build_nplus(RootType t) {
  RootSystem rs = RootSystem::build(t);
  switch (t.family) {
    case RootFamily::A:
    case RootFamily::B:
    case RootFamily::C:
    case RootFamily::D: {
      LieAlgebra alg = matrix_nplus(rs);
      return {std::move(rs), std::move(alg)};
    }
    default: {
      LieAlgebra alg = chevalley_nplus(rs);
      return {std::move(rs), std::move(alg)};
    }
  }
}

GradedBasis build_nplus_chevalley(RootType t) {
  RootSystem rs = RootSystem::build(t);
  LieAlgebra alg = chevalley_nplus(rs);
  return {std::move(rs), std::move(alg)};
}

LieAlgebra upper_triangular(std::size_t n) {
  if (n < 2) throw std::invalid_argument("upper_triangular needs n >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos_idx;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pos_idx[{i, j}] = pos.size();
      pos.emplace_back(i, j);
      std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
      labels.push_back(n <= 9 ? "E" + a + b : "E(" + a + "," + b + ")");
    }
  StructureConstants constants;
  for (std::size_t p = 0; p < pos.size(); ++p)
    for (std::size_t q = p + 1; q < pos.size(); ++q) {
      const auto [i, j] = pos[p];
      const auto [k, l] = pos[q];
      SparseVec sv;
      if (j == k) sv.push_back({pos_idx[{i, l}], Rational(1)});
      if (l == i) sv.push_back({pos_idx[{k, j}], Rational(-1)});
      if (!sv.empty()) constants[{p, q}] = std::move(sv);
    }
  return LieAlgebra::from_constants(pos.size(), std::move(labels), std::move(constants));
}

}  // namespace nilchar
