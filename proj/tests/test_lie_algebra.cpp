#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilchar/lie_algebra.hpp"

using namespace nilchar;

namespace {

// dim 6, class 5: [x1,x2]=x3, [x1,x5]=x6, [x2,x3]=x4, [x2,x4]=x5, [x3,x4]=x6.
StructureConstants six_dim_table() {
  StructureConstants c;
  c[{0, 1}] = {{2, Rational(1)}};
  c[{0, 4}] = {{5, Rational(1)}};
  c[{1, 2}] = {{3, Rational(1)}};
  c[{1, 3}] = {{4, Rational(1)}};
  c[{2, 3}] = {{5, Rational(1)}};
  return c;
}

StructureConstants heisenberg_table() {
  StructureConstants c;
  c[{0, 1}] = {{2, Rational(1)}};
  return c;
}

StructureConstants filiform_table(std::size_t n) {
  StructureConstants c;
  for (std::size_t i = 1; i + 1 < n; ++i) c[{0, i}] = {{i + 1, Rational(1)}};
  return c;
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

TEST_CASE("construction validates input shape") {
  StructureConstants bad;
  bad[{1, 0}] = {{2, Rational(1)}};
  CHECK_THROWS_AS(LieAlgebra::from_constants(3, {}, bad), std::invalid_argument);
  StructureConstants oob;
  oob[{0, 1}] = {{7, Rational(1)}};
  CHECK_THROWS_AS(LieAlgebra::from_constants(3, {}, oob), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::from_constants(2, {"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("jacobi violation is reported with the offending triple") {
  StructureConstants c = six_dim_table();
  c[{1, 3}] = {{5, Rational(1)}};  // divert [x2,x4] to x6
  try {
    LieAlgebra::from_constants(6, {}, c);
    FAIL("expected JacobiError");
  } catch (const JacobiError& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 3);
    CHECK(std::string(e.what()).find("x1") != std::string::npos);
  }
  auto g = LieAlgebra::from_constants(6, {}, c, CheckPolicy::Deferred);
  auto viols = g.jacobi_check();
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].i == 0);
  CHECK(viols[0].j == 1);
  CHECK(viols[0].k == 3);
}

TEST_CASE("non-nilpotent tables are rejected with the stabilized term") {
  StructureConstants c;
  c[{0, 1}] = {{1, Rational(1)}};  // [x1,x2] = x2
  try {
    LieAlgebra::from_constants(2, {}, c);
    FAIL("expected NotNilpotentError");
  } catch (const NotNilpotentError& e) {
    CHECK(e.stabilized_dim == 1);
  }
  auto g = LieAlgebra::from_constants(2, {}, c, CheckPolicy::Deferred);
  CHECK(g.jacobi_check().empty());
  CHECK_THROWS_AS(g.nilpotency_class(), NotNilpotentError);
}

TEST_CASE("six-dimensional example: series and centralizers") {
  auto g = LieAlgebra::from_constants(6, {}, six_dim_table());
  CHECK(g.nilpotency_class() == 5);

  auto z = g.center();
  CHECK(z == coord_span(6, {5}));

  auto ucs = g.upper_central_series();
  REQUIRE(ucs.size() == 5);
  CHECK(ucs[0] == coord_span(6, {5}));
  CHECK(ucs[1] == coord_span(6, {4, 5}));
  CHECK(ucs[2] == coord_span(6, {3, 4, 5}));
  CHECK(ucs[3] == coord_span(6, {2, 3, 4, 5}));
  CHECK(ucs[4] == coord_span(6, {0, 1, 2, 3, 4, 5}));

  auto a1 = g.centralizer(g.full_space(), ucs[1]);
  CHECK(a1 == coord_span(6, {1, 2, 3, 4, 5}));
  CHECK(g.is_ideal(a1));
  CHECK_FALSE(g.is_abelian(a1));
  CHECK(g.is_ideal(ucs[2]));
  CHECK(g.is_abelian(ucs[2]));
}

TEST_CASE("heisenberg and filiform series") {
  auto h = LieAlgebra::from_constants(3, {}, heisenberg_table());
  CHECK(h.nilpotency_class() == 2);
  auto ucs = h.upper_central_series();
  REQUIRE(ucs.size() == 2);
  CHECK(ucs[0].rows() == 1);
  CHECK(ucs[1].rows() == 3);

  auto f5 = LieAlgebra::from_constants(5, {}, filiform_table(5));
  CHECK(f5.nilpotency_class() == 4);
  std::vector<std::size_t> dims;
  for (const auto& t : f5.upper_central_series()) dims.push_back(t.rows());
  CHECK(dims == std::vector<std::size_t>{1, 2, 3, 5});
  CHECK(f5.upper_central_series(2).size() == 2);
}

TEST_CASE("bracket is bilinear and antisymmetric on the example") {
  auto g = LieAlgebra::from_constants(6, {}, six_dim_table());
  QVector x = {Rational(1), Rational(2), Rational(0), Rational(-1), Rational(1, 2), Rational(0)};
  QVector y = {Rational(0), Rational(1), Rational(3), Rational(0), Rational(0), Rational(7)};
  CHECK(g.bracket(x, y) == scale(Rational(-1), g.bracket(y, x)));
  QVector x2 = scale(Rational(3, 2), x);
  CHECK(g.bracket(x2, y) == scale(Rational(3, 2), g.bracket(x, y)));
  CHECK(is_zero_vector(g.bracket(x, x)));

  QVector e1 = zero_vector(6);
  e1[0] = Rational(1);
  CHECK(g.bracket_with_basis(0, y) == g.bracket(e1, y));
}

TEST_CASE("restriction to an ideal keeps labels and structure") {
  auto g = LieAlgebra::from_constants(6, {}, six_dim_table());
  auto sub = coord_span(6, {1, 2, 3, 4, 5});
  auto h = g.restricted_to(sub);
  CHECK(h.dim() == 5);
  CHECK(h.labels() == std::vector<std::string>{"x2", "x3", "x4", "x5", "x6"});
  CHECK(h.nilpotency_class() == 3);

  auto hz2 = h.upper_central_series(2)[1];
  CHECK(lift_through(sub, hz2) == coord_span(6, {3, 4, 5}));

  auto not_closed = coord_span(6, {0, 1});
  CHECK_THROWS_AS(g.restricted_to(not_closed), std::invalid_argument);
}

TEST_CASE("direct sum of two heisenbergs") {
  auto h = LieAlgebra::from_constants(3, {}, heisenberg_table());
  auto s = LieAlgebra::direct_sum(h, h);
  CHECK(s.dim() == 6);
  CHECK(s.nilpotency_class() == 2);
  CHECK(s.center().rows() == 2);
  CHECK(s.labels() == std::vector<std::string>{"x1", "x2", "x3", "x1'", "x2'", "x3'"});
  QVector left = zero_vector(6), right = zero_vector(6);
  left[0] = Rational(1);
  right[4] = Rational(1);
  CHECK(is_zero_vector(s.bracket(left, right)));
}
