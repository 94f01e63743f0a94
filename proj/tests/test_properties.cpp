#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilchar/char_subalg.hpp"
#include "nilchar/chevalley.hpp"
#include "nilchar/fixtures.hpp"

using namespace nilchar;

namespace {

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  return Rational(num(rng), den(rng));
}

QVector random_vector(std::mt19937& rng, std::size_t n) {
  QVector v = zero_vector(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  QVector out = zero_vector(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::vector<RootType> sample_types() {
  return {{RootFamily::A, 3}, {RootFamily::A, 4}, {RootFamily::B, 3},
          {RootFamily::B, 4}, {RootFamily::C, 3}, {RootFamily::C, 4},
          {RootFamily::D, 4}, {RootFamily::G, 2}, {RootFamily::F, 4}};
}

std::vector<std::size_t> ucs_dims(const LieAlgebra& g) {
  std::vector<std::size_t> out;
  for (const auto& term : g.upper_central_series()) out.push_back(term.rows());
  return out;
}

// Sparse tables compatible with the index filtration: [x_i, x_j] lands in
// span{x_k : k > j}, which forces nilpotency. Jacobi failures are discarded.
std::optional<LieAlgebra> random_filtered_table(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> dim_pick(4, 6);
  std::size_t n = dim_pick(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> coeff(1, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  StructureConstants c;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j + 1 >= n || coin(rng) > 0.35) continue;
      std::uniform_int_distribution<std::size_t> target(j + 1, n - 1);
      long val = coeff(rng) * (sign(rng) ? 1 : -1);
      c[{i, j}] = {{target(rng), Rational(val)}};
    }
  }
  try {
    return LieAlgebra::from_constants(n, {}, c);
  } catch (const JacobiError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("jacobi identity holds on every built algebra") {
  for (RootType t : sample_types()) {
    std::string type_name = root_type_str(t);
    CAPTURE(type_name);
    CHECK(build_nplus(t).algebra.jacobi_check().empty());
    CHECK(build_nplus_chevalley(t).algebra.jacobi_check().empty());
  }
  for (const std::string& name :
       {"example-6d", "heisenberg", "filiform-6", "c2-presentation",
        "upper-triangular-5"}) {
    CAPTURE(name);
    CHECK(builtin_algebra(name).jacobi_check().empty());
  }
}

TEST_CASE("rank plus kernel dimension equals the column count") {
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int round = 0; round < 40; ++round) {
    std::size_t rows = size(rng), cols = size(rng);
    QMatrix m(cols);
    for (std::size_t r = 0; r < rows; ++r) m.push_row(random_vector(rng, cols));
    QMatrix null_basis = kernel(m);
    CHECK(rank(m) + null_basis.rows() == cols);
    for (std::size_t r = 0; r < null_basis.rows(); ++r)
      CHECK(is_zero_vector(mat_vec(m, null_basis.row(r))));
  }
}

TEST_CASE("intersection and sum of row spaces bracket the summands") {
  std::mt19937 rng(7);
  for (int round = 0; round < 25; ++round) {
    std::size_t n = 6;
    QMatrix u(n), v(n);
    for (int r = 0; r < 3; ++r) {
      u.push_row(random_vector(rng, n));
      v.push_row(random_vector(rng, n));
    }
    QMatrix meet = intersect(u, v);
    QMatrix join = span_sum(u, v);
    CHECK(row_space_contains(u, meet));
    CHECK(row_space_contains(v, meet));
    CHECK(row_space_contains(join, u));
    CHECK(row_space_contains(join, v));
    CHECK(meet.rows() + join.rows() == rank(u) + rank(v));
  }
}

TEST_CASE("bracket is bilinear and alternating on random vectors") {
  std::mt19937 rng(99);
  for (RootType t : {RootType{RootFamily::B, 3}, RootType{RootFamily::G, 2}}) {
    LieAlgebra g = build_nplus(t).algebra;
    for (int round = 0; round < 10; ++round) {
      QVector x = random_vector(rng, g.dim());
      QVector y = random_vector(rng, g.dim());
      QVector z = random_vector(rng, g.dim());
      CHECK(is_zero_vector(g.bracket(x, x)));
      CHECK(g.bracket(x, add(y, z)) == add(g.bracket(x, y), g.bracket(x, z)));
      CHECK(g.bracket(add(x, y), z) == add(g.bracket(x, z), g.bracket(y, z)));
      CHECK(g.bracket(x, y) == scale(Rational(-1), g.bracket(y, x)));
    }
  }
}

TEST_CASE("twenty random diagonal rescalings preserve every invariant dimension") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> num(1, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<LieAlgebra> subjects = {builtin_algebra("example-6d"),
                                      build_nplus({RootFamily::B, 3}).algebra,
                                      build_nplus({RootFamily::C, 3}).algebra};
  for (const LieAlgebra& g : subjects) {
    auto base_ucs = ucs_dims(g);
    auto base_descent = second_center_descent(g).dims();
    SweepResult base_sweep = square_zero_sweep(g);
    for (int round = 0; round < 20; ++round) {
      std::vector<Rational> factors;
      for (std::size_t i = 0; i < g.dim(); ++i)
        factors.push_back(Rational((sign(rng) ? 1 : -1) * num(rng), den(rng)));
      LieAlgebra h = rescaled_basis(g, factors);
      CHECK(ucs_dims(h) == base_ucs);
      CHECK(second_center_descent(h).dims() == base_descent);
      SweepResult sweep = square_zero_sweep(h);
      CHECK(sweep.bound.rows() == base_sweep.bound.rows());
      CHECK(sweep.exact_center == base_sweep.exact_center);
    }
  }
}

TEST_CASE("the center always sits inside the sweep bound") {
  for (RootType t : sample_types()) {
    LieAlgebra g = build_nplus(t).algebra;
    CHECK(row_space_contains(square_zero_sweep(g).bound, g.center()));
  }
  for (const std::string& name :
       {"example-6d", "heisenberg", "filiform-5", "c2-presentation",
        "upper-triangular-6"}) {
    LieAlgebra g = builtin_algebra(name);
    CHECK(row_space_contains(square_zero_sweep(g).bound, g.center()));
  }
}

TEST_CASE("fifty random filtered tables: descent terms are ideals, the limit is abelian") {
  std::mt19937 rng(161803);
  int accepted = 0, attempts = 0;
  while (accepted < 50 && attempts < 4000) {
    ++attempts;
    auto maybe = random_filtered_table(rng);
    if (!maybe) continue;
    const LieAlgebra& g = *maybe;
    ++accepted;
    CAPTURE(attempts);
    DescentChain chain = second_center_descent(g);
    for (const QMatrix& term : chain.terms) CHECK(g.is_ideal(term));
    CHECK(g.is_abelian(chain.stable()));
    CHECK(row_space_contains(chain.stable(), g.center()));
    CHECK(row_space_contains(square_zero_sweep(g).bound, g.center()));
    CHECK(ucs_dims(g).back() == g.dim());
  }
  CHECK(accepted == 50);
}
