#include "nilchar/char_subalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace nilchar {

namespace {

QMatrix coord_subspace(std::size_t dim, const std::vector<std::size_t>& idx) {
  QMatrix m(dim);
  for (std::size_t i : idx) {
    QVector v = zero_vector(dim);
    v[i] = Rational(1);
    m.push_row(std::move(v));
  }
  return rref(std::move(m));
}

// Second center of the subalgebra spanned by `frame`, lifted back to the
// coordinates of g.
QMatrix second_center_of(const LieAlgebra& g, const QMatrix& frame) {
  LieAlgebra h = g.restricted_to(frame, CheckPolicy::Deferred);
  auto ucs = h.upper_central_series(2);
  return lift_through(frame, ucs.back());
}

}  // namespace

std::vector<std::size_t> DescentChain::dims() const {
  std::vector<std::size_t> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.rows());
  return out;
}

DescentChain second_center_descent(const LieAlgebra& g) {
  DescentChain chain;
  chain.terms.push_back(g.full_space());
  for (;;) {
    const QMatrix& cur = chain.terms.back();
    QMatrix next = g.centralizer(cur, second_center_of(g, cur));
    if (same_row_space(next, cur)) return chain;
    chain.terms.push_back(std::move(next));
  }
}

bool z2_spans_second_center(const GradedBasis& nb) {
  auto ucs = nb.algebra.upper_central_series(2);
  return same_row_space(ucs.back(), coord_subspace(nb.dim(), nb.roots.z2_root_set()));
}

SweepResult square_zero_sweep(const LieAlgebra& g) {
  SweepResult res;
  res.bound = g.full_space();
  for (bool fired = true; fired;) {
    fired = false;
    for (std::size_t i = 0; i < g.dim() && !fired; ++i) {
      bool square_zero = true;
      bool moves = false;
      for (std::size_t r = 0; r < res.bound.rows(); ++r) {
        QVector first = g.bracket_with_basis(i, res.bound.row(r));
        if (is_zero_vector(first)) continue;
        moves = true;
        if (!is_zero_vector(g.bracket_with_basis(i, first))) {
          square_zero = false;
          break;
        }
      }
      if (!square_zero || !moves) continue;
      QVector w = zero_vector(g.dim());
      w[i] = Rational(1);
      res.bound = intersect(res.bound, kernel(g.ad_constraint_matrix(w)));
      res.trace.push_back({i, res.bound.rows()});
      fired = true;
    }
  }
  res.exact_center = same_row_space(res.bound, g.center());
  return res;
}

std::optional<GradedShrinkStep> graded_shrink_step(const LieAlgebra& g,
                                                   const std::vector<std::size_t>& j_set) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    bool ok = true;
    std::vector<std::size_t> removed;
    std::vector<std::size_t> targets;
    for (std::size_t m : j_set) {
      SparseVec b = g.basis_bracket(i, m);
      if (b.empty()) continue;
      if (b.size() != 1) {
        ok = false;
        break;
      }
      QVector as_vec = zero_vector(g.dim());
      as_vec[b.front().first] = b.front().second;
      if (!is_zero_vector(g.bracket_with_basis(i, as_vec))) {
        ok = false;  // the witness does not square to zero on the span
        break;
      }
      removed.push_back(m);
      targets.push_back(b.front().first);
    }
    if (!ok || removed.empty()) continue;
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) continue;
    return GradedShrinkStep{i, std::move(removed)};
  }
  return std::nullopt;
}

ShrinkChainResult highest_root_reduction(RootType t) {
  ShrinkChainResult res;
  if (t.family == RootFamily::C || (t.family == RootFamily::B && t.rank == 2)) {
    res.refused = true;
    res.reason = root_type_str(t) +
                 ": the square-zero sweep stabilizes at the abelian ideal spanned by the "
                 "symmetric roots, strictly above the highest root line";
    return res;
  }
  GradedBasis nb = build_nplus(t);
  std::vector<std::size_t> j_set(nb.dim());
  for (std::size_t i = 0; i < j_set.size(); ++i) j_set[i] = i;
  const std::vector<std::size_t> goal = {nb.roots.highest_index()};
  while (j_set != goal) {
    auto step = graded_shrink_step(nb.algebra, j_set);
    if (!step) break;
    std::vector<std::size_t> rest;
    for (std::size_t m : j_set)
      if (std::find(step->removed.begin(), step->removed.end(), m) == step->removed.end())
        rest.push_back(m);
    j_set = std::move(rest);
    res.steps.push_back(std::move(*step));
  }
  res.final_set = j_set;
  res.reached_highest_line = (j_set == goal);
  return res;
}

TypeCIdeal type_c_abelian_ideal(const GradedBasis& nb) {
  if (nb.roots.type().family != RootFamily::C)
    throw std::invalid_argument("symmetric-root ideal is a type C construction");
  TypeCIdeal out;
  for (std::size_t i = 0; i < nb.roots.positive_count(); ++i) {
    bool symmetric = true;
    for (const Rational& c : nb.roots.positive()[i])
      if (c.sign() < 0) symmetric = false;
    if (symmetric) out.root_indices.push_back(i);
  }
  out.subspace = coord_subspace(nb.dim(), out.root_indices);
  out.abelian = nb.algebra.is_abelian(out.subspace);
  out.ideal = nb.algebra.is_ideal(out.subspace);
  out.maximal_abelian =
      same_row_space(nb.algebra.centralizer(nb.algebra.full_space(), out.subspace), out.subspace);
  return out;
}

namespace {

// Structure constants flattened to integer quadruples (i, j, k, c) meaning
// [e_i, e_j] takes c * e_k, with both orientations present.
struct IntTable {
  std::size_t dim;
  std::vector<std::array<long long, 4>> quads;
};

IntTable int_table(const LieAlgebra& g) {
  IntTable t{g.dim(), {}};
  for (const auto& [key, sv] : g.constants())
    for (const auto& [k, c] : sv) {
      if (!c.is_integer())
        throw std::invalid_argument("scan oracles need integer structure constants");
      long long v = std::stoll(c.str());
      if (std::abs(v) > 1000)
        throw std::invalid_argument("scan oracles need small structure constants");
      t.quads.push_back({(long long)key.first, (long long)key.second, (long long)k, v});
      t.quads.push_back({(long long)key.second, (long long)key.first, (long long)k, -v});
    }
  return t;
}

// Dense ad(w) with W[k * dim + j] the e_k coefficient of [w, e_j].
void build_ad(const IntTable& t, const std::vector<long long>& w, std::vector<long long>& W) {
  std::fill(W.begin(), W.end(), 0);
  for (const auto& q : t.quads) {
    long long wi = w[(std::size_t)q[0]];
    if (wi != 0) W[(std::size_t)q[2] * t.dim + (std::size_t)q[1]] += wi * q[3];
  }
}

bool ad_nonzero(const std::vector<long long>& W) {
  return std::any_of(W.begin(), W.end(), [](long long v) { return v != 0; });
}

bool ad_squares_to_zero(const std::vector<long long>& W, std::size_t dim) {
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k2 = 0; k2 < dim; ++k2) {
      long long acc = 0;
      for (std::size_t k = 0; k < dim; ++k) acc += W[k2 * dim + k] * W[k * dim + j];
      if (acc != 0) return false;
    }
  return true;
}

}  // namespace

GridScan square_zero_grid_scan(const LieAlgebra& g, const QMatrix& candidate,
                               unsigned long long budget) {
  if (candidate.cols() != g.dim())
    throw std::invalid_argument("candidate dimension mismatch in grid scan");
  const IntTable t = int_table(g);
  const std::size_t dim = g.dim();

  GridScan res;
  auto grid_count = [dim](unsigned long long width) {
    unsigned long long total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (total > (1ULL << 62) / width) return ~0ULL;
      total *= width;
    }
    return total;
  };
  if (grid_count(5) <= budget)
    res.radius = 2;
  else if (grid_count(3) <= budget)
    res.radius = 1;
  else
    throw std::invalid_argument("grid scan budget too small for this dimension");

  std::vector<long long> w(dim, -res.radius), W(dim * dim);
  for (bool done = false; !done;) {
    // Only witnesses whose first nonzero coordinate is positive: w and -w
    // have the same kernel.
    std::size_t first = 0;
    while (first < dim && w[first] == 0) ++first;
    if (first < dim && w[first] > 0) {
      ++res.samples;
      build_ad(t, w, W);
      if (ad_nonzero(W) && ad_squares_to_zero(W, dim)) {
        ++res.square_zero_witnesses;
        for (std::size_t r = 0; r < candidate.rows(); ++r) {
          bool killed = true;
          for (std::size_t k = 0; k < dim && killed; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j < dim; ++j) {
              long long c = W[k * dim + j];
              if (c != 0) acc += Rational(static_cast<long>(c)) * candidate.at(r, j);
            }
            if (!acc.is_zero()) killed = false;
          }
          if (!killed && res.violations.size() < 16)
            res.violations.push_back({std::vector<long>(w.begin(), w.end()), r});
        }
      }
    }
    done = true;
    for (std::size_t i = 0; i < dim; ++i) {
      if (w[i] < res.radius) {
        ++w[i];
        std::fill(w.begin(), w.begin() + (long)i, -res.radius);
        done = false;
        break;
      }
    }
  }
  return res;
}

namespace {

long long mod_norm(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// Row-reduce an F_p matrix in place; returns the pivot columns.
std::vector<std::size_t> rref_p(std::vector<std::vector<long long>>& m, long long p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    // invert the pivot by Fermat
    long long inv = 1, base = m[row][col], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& v : m[row]) v = v * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      long long f = m[r][col];
      for (std::size_t c2 = 0; c2 < cols; ++c2)
        m[r][c2] = mod_norm(m[r][c2] - f * m[row][c2], p);
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(pivots.size());
  return pivots;
}

std::vector<std::vector<long long>> kernel_p(std::vector<std::vector<long long>> m,
                                             std::size_t cols, long long p) {
  auto pivots = rref_p(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<long long>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<long long> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = mod_norm(-m[r][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ModPScan square_zero_mod_p_scan(const LieAlgebra& g, const QMatrix& candidate, long prime,
                                unsigned long long budget) {
  if (prime < 2 || prime > 46337) throw std::invalid_argument("prime out of range for mod-p scan");
  for (long d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("mod-p scan needs a prime modulus");
  if (candidate.cols() != g.dim())
    throw std::invalid_argument("candidate dimension mismatch in mod-p scan");
  const std::size_t dim = g.dim();
  const long long p = prime;

  unsigned long long total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > budget) break;
    total *= (unsigned long long)p;
  }
  if (total > budget) throw std::invalid_argument("mod-p scan budget too small for this dimension");

  // Structure constants and candidate rows reduced mod p; mod_p throws on
  // denominators divisible by p.
  IntTable t{dim, {}};
  for (const auto& [key, sv] : g.constants())
    for (const auto& [k, c] : sv) {
      long long v = (long long)c.mod_p((unsigned long)p);
      t.quads.push_back({(long long)key.first, (long long)key.second, (long long)k, v});
      t.quads.push_back({(long long)key.second, (long long)key.first, (long long)k,
                         mod_norm(-v, p)});
    }
  std::vector<std::vector<long long>> cand_rows;
  for (std::size_t r = 0; r < candidate.rows(); ++r) {
    std::vector<long long> row(dim);
    for (std::size_t j = 0; j < dim; ++j)
      row[j] = (long long)candidate.at(r, j).mod_p((unsigned long)p);
    cand_rows.push_back(std::move(row));
  }

  ModPScan res;
  res.prime = prime;

  // Current intersection, as F_p basis rows; starts as everything.
  std::vector<std::vector<long long>> space;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<long long> v(dim, 0);
    v[i] = 1;
    space.push_back(std::move(v));
  }

  std::vector<long long> w(dim, 0), W(dim * dim);
  for (bool done = false; !done;) {
    // One representative per projective line: first nonzero coordinate 1.
    std::size_t first = 0;
    while (first < dim && w[first] == 0) ++first;
    if (first < dim && w[first] == 1) {
      build_ad(t, w, W);
      for (auto& v : W) v = mod_norm(v, p);
      if (ad_nonzero(W) && [&] {
            for (std::size_t j = 0; j < dim; ++j)
              for (std::size_t k2 = 0; k2 < dim; ++k2) {
                long long acc = 0;
                for (std::size_t k = 0; k < dim; ++k)
                  acc = (acc + W[k2 * dim + k] * W[k * dim + j]) % p;
                if (acc != 0) return false;
              }
            return true;
          }()) {
        ++res.square_zero_witnesses;
        // Does W already kill the running space?
        bool killed = true;
        for (const auto& b : space) {
          for (std::size_t k = 0; k < dim && killed; ++k) {
            long long acc = 0;
            for (std::size_t j = 0; j < dim; ++j) acc = (acc + W[k * dim + j] * b[j]) % p;
            if (acc != 0) killed = false;
          }
          if (!killed) break;
        }
        if (!killed) {
          // Solve W * (c . space) = 0 for coefficient vectors c.
          std::vector<std::vector<long long>> sys(dim, std::vector<long long>(space.size(), 0));
          for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t s = 0; s < space.size(); ++s) {
              long long acc = 0;
              for (std::size_t j = 0; j < dim; ++j)
                acc = (acc + W[k * dim + j] * space[s][j]) % p;
              sys[k][s] = acc;
            }
          auto coeffs = kernel_p(std::move(sys), space.size(), p);
          std::vector<std::vector<long long>> next;
          for (const auto& c : coeffs) {
            std::vector<long long> v(dim, 0);
            for (std::size_t s = 0; s < space.size(); ++s)
              if (c[s] != 0)
                for (std::size_t j = 0; j < dim; ++j)
                  v[j] = (v[j] + c[s] * space[s][j]) % p;
            next.push_back(std::move(v));
          }
          rref_p(next, p);
          space = std::move(next);
        }
      }
    }
    done = true;
    for (std::size_t i = 0; i < dim; ++i) {
      if (w[i] < p - 1) {
        ++w[i];
        std::fill(w.begin(), w.begin() + (long)i, 0);
        done = false;
        break;
      }
    }
  }

  rref_p(space, p);
  res.swept_dim = space.size();
  auto reduced = cand_rows;
  rref_p(reduced, p);
  res.matches_candidate = (reduced == space);
  return res;
}

}  // namespace nilchar
