#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilchar/char_subalg.hpp"

using namespace nilchar;

namespace {

StructureConstants six_dim_table() {
  StructureConstants c;
  c[{0, 1}] = {{2, Rational(1)}};
  c[{0, 4}] = {{5, Rational(1)}};
  c[{1, 2}] = {{3, Rational(1)}};
  c[{1, 3}] = {{4, Rational(1)}};
  c[{2, 3}] = {{5, Rational(1)}};
  return c;
}

LieAlgebra heisenberg() {
  StructureConstants c;
  c[{0, 1}] = {{2, Rational(1)}};
  return LieAlgebra::from_constants(3, {}, c);
}

LieAlgebra filiform(std::size_t n) {
  StructureConstants c;
  for (std::size_t i = 1; i + 1 < n; ++i) c[{0, i}] = {{i + 1, Rational(1)}};
  return LieAlgebra::from_constants(n, {}, c);
}

QMatrix coord_span(std::size_t dim, std::vector<std::size_t> idx) {
  QMatrix m(dim);
  for (std::size_t i : idx) {
    QVector v = zero_vector(dim);
    v[i] = Rational(1);
    m.push_row(std::move(v));
  }
  return rref(std::move(m));
}

}  // namespace

TEST_CASE("six-dimensional example: descent chain") {
  auto g = LieAlgebra::from_constants(6, {}, six_dim_table());
  auto chain = second_center_descent(g);
  CHECK(chain.dims() == std::vector<std::size_t>{6, 5, 3});
  CHECK(chain.terms[1] == coord_span(6, {1, 2, 3, 4, 5}));
  CHECK(chain.stable() == coord_span(6, {3, 4, 5}));
  CHECK(g.is_ideal(chain.stable()));
  CHECK(g.is_abelian(chain.stable()));
  // Here the second center happens to sit inside the stable term.
  CHECK(row_space_contains(chain.stable(), g.upper_central_series(2).back()));
}

TEST_CASE("six-dimensional example: square-zero sweep hits the center") {
  auto g = LieAlgebra::from_constants(6, {}, six_dim_table());
  auto sweep = square_zero_sweep(g);
  REQUIRE(sweep.trace.size() == 4);
  CHECK(sweep.trace[0].witness == 0);
  CHECK(sweep.trace[0].dim_after == 4);
  CHECK(sweep.trace[1].witness == 2);
  CHECK(sweep.trace[1].dim_after == 3);
  CHECK(sweep.trace[2].witness == 3);
  CHECK(sweep.trace[2].dim_after == 2);
  CHECK(sweep.trace[3].witness == 4);
  CHECK(sweep.trace[3].dim_after == 1);
  CHECK(sweep.bound == coord_span(6, {5}));
  CHECK(sweep.exact_center);
}

TEST_CASE("heisenberg: descent and sweep") {
  auto h = heisenberg();
  CHECK(second_center_descent(h).dims() == std::vector<std::size_t>{3, 1});
  auto sweep = square_zero_sweep(h);
  REQUIRE(sweep.trace.size() == 2);
  CHECK(sweep.trace[0].witness == 0);
  CHECK(sweep.trace[0].dim_after == 2);
  CHECK(sweep.trace[1].witness == 1);
  CHECK(sweep.trace[1].dim_after == 1);
  CHECK(sweep.exact_center);
}

TEST_CASE("filiform: sweep stops above the center") {
  auto f = filiform(5);
  CHECK(second_center_descent(f).dims() == std::vector<std::size_t>{5, 4});
  auto sweep = square_zero_sweep(f);
  CHECK(sweep.bound == coord_span(5, {1, 2, 3, 4}));
  CHECK_FALSE(sweep.exact_center);

  // No grid witness cuts deeper, so the fixpoint is exact here too.
  auto scan = square_zero_grid_scan(f, sweep.bound);
  CHECK(scan.radius == 2);
  CHECK(scan.square_zero_witnesses > 0);
  CHECK(scan.violations.empty());
}

TEST_CASE("type C: the sweep stabilizes at the symmetric-root ideal") {
  for (int rank : {2, 3}) {
    CAPTURE(rank);
    auto nb = build_nplus({RootFamily::C, rank});
    auto ideal = type_c_abelian_ideal(nb);
    const std::size_t want = (std::size_t)rank * (rank + 1) / 2;
    CHECK(ideal.root_indices.size() == want);
    CHECK(ideal.abelian);
    CHECK(ideal.ideal);
    CHECK(ideal.maximal_abelian);

    auto sweep = square_zero_sweep(nb.algebra);
    CHECK(sweep.bound == ideal.subspace);
    CHECK_FALSE(sweep.exact_center);
  }
  CHECK_THROWS_AS(type_c_abelian_ideal(build_nplus({RootFamily::B, 3})), std::invalid_argument);
}

TEST_CASE("graded shrink step on G2") {
  auto nb = build_nplus(parse_root_type("G2"));
  // lex order: 0 = ε, 1 = δ, 2 = δ+ε, 3 = 2δ+ε, 4 = 3δ+ε, 5 = 3δ+2ε
  auto step = graded_shrink_step(nb.algebra, {0, 5});
  REQUIRE(step.has_value());
  CHECK(step->witness == 4);
  CHECK(step->removed == std::vector<std::size_t>{0});

  auto none = graded_shrink_step(nb.algebra, {5});
  CHECK_FALSE(none.has_value());
}

TEST_CASE("reduction to the highest root line") {
  for (const char* name : {"A2", "A3", "B3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    auto res = highest_root_reduction(parse_root_type(name));
    CHECK_FALSE(res.refused);
    CHECK(res.reached_highest_line);
    auto nb = build_nplus(parse_root_type(name));
    CHECK(res.final_set == std::vector<std::size_t>{nb.roots.highest_index()});
    CHECK_FALSE(res.steps.empty());
  }
  for (const char* name : {"C2", "C3", "C5", "B2"}) {
    CAPTURE(name);
    auto res = highest_root_reduction(parse_root_type(name));
    CHECK(res.refused);
    CHECK_FALSE(res.reached_highest_line);
    CHECK(res.steps.empty());
    CHECK_FALSE(res.reason.empty());
  }
}

TEST_CASE("grid scan validates the type C ideal") {
  auto nb = build_nplus(parse_root_type("C2"));
  auto ideal = type_c_abelian_ideal(nb);
  auto scan = square_zero_grid_scan(nb.algebra, ideal.subspace);
  CHECK(scan.radius == 2);
  CHECK(scan.samples == 312);  // (5^4 - 1) / 2 sign-reduced grid points
  CHECK(scan.square_zero_witnesses > 0);
  CHECK(scan.violations.empty());

  // The full space is not annihilated, so violations must show up.
  auto bad = square_zero_grid_scan(nb.algebra, nb.algebra.full_space());
  CHECK_FALSE(bad.violations.empty());

  CHECK_THROWS_AS(square_zero_grid_scan(nb.algebra, ideal.subspace, 10), std::invalid_argument);
}

TEST_CASE("mod-p scan reproduces the sweep value") {
  auto c2 = build_nplus(parse_root_type("C2"));
  auto ideal2 = type_c_abelian_ideal(c2);
  auto scan2 = square_zero_mod_p_scan(c2.algebra, ideal2.subspace, 5);
  CHECK(scan2.prime == 5);
  CHECK(scan2.swept_dim == 3);
  CHECK(scan2.matches_candidate);

  auto c3 = build_nplus(parse_root_type("C3"));
  auto ideal3 = type_c_abelian_ideal(c3);
  auto scan3 = square_zero_mod_p_scan(c3.algebra, ideal3.subspace, 3);
  CHECK(scan3.swept_dim == 6);
  CHECK(scan3.matches_candidate);

  auto h = heisenberg();
  auto center = h.center();
  auto scanh = square_zero_mod_p_scan(h, center, 7);
  CHECK(scanh.swept_dim == 1);
  CHECK(scanh.matches_candidate);

  CHECK_THROWS_AS(square_zero_mod_p_scan(c2.algebra, ideal2.subspace, 4), std::invalid_argument);
  CHECK_THROWS_AS(square_zero_mod_p_scan(c3.algebra, ideal3.subspace, 5, 1000),
                  std::invalid_argument);
}

TEST_CASE("mod-p scan rejects primes dividing a denominator") {
  StructureConstants c;
  c[{0, 1}] = {{2, Rational(1, 2)}};
  auto g = LieAlgebra::from_constants(3, {}, c);
  CHECK_THROWS(square_zero_mod_p_scan(g, g.center(), 2));
  auto ok = square_zero_mod_p_scan(g, g.center(), 3);
  CHECK(ok.matches_candidate);
}

TEST_CASE("descent chain of positive root algebras reaches an abelian term") {
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    CAPTURE(name);
    auto nb = build_nplus(parse_root_type(name));
    auto chain = second_center_descent(nb.algebra);
    CHECK(nb.algebra.is_abelian(chain.stable()));
    CHECK(nb.algebra.is_ideal(chain.stable()));
  }
}

TEST_CASE("the z2 root set spans the second center") {
  for (const char* name : {"A2", "A4", "B2", "B4", "C3", "D4", "G2", "F4", "E6"}) {
    CAPTURE(name);
    CHECK(z2_spans_second_center(build_nplus(parse_root_type(name))));
  }
}
