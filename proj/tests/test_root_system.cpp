#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "nilchar/root_system.hpp"

using namespace nilchar;

namespace {

std::set<std::string> z2_names(const RootSystem& rs) {
  std::set<std::string> out;
  for (std::size_t i : rs.z2_root_set()) out.insert(rs.root_name(i));
  return out;
}

}  // namespace

TEST_CASE("root type parsing") {
  CHECK(root_type_str(parse_root_type("A5")) == "A5");
  CHECK(root_type_str(parse_root_type("e8")) == "E8");
  CHECK_THROWS_AS(parse_root_type("D3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("E5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("E9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("F3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("G4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("A0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("B1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("H4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("Bx"), std::invalid_argument);
}

TEST_CASE("positive root counts") {
  auto count = [](const std::string& t) {
    return RootSystem::build(parse_root_type(t)).positive_count();
  };
  for (int n = 1; n <= 6; ++n)
    CHECK(count("A" + std::to_string(n)) == static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 2; n <= 6; ++n) {
    CHECK(count("B" + std::to_string(n)) == static_cast<std::size_t>(n * n));
    CHECK(count("C" + std::to_string(n)) == static_cast<std::size_t>(n * n));
  }
  for (int n = 4; n <= 6; ++n)
    CHECK(count("D" + std::to_string(n)) == static_cast<std::size_t>(n * (n - 1)));
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
  CHECK(count("F4") == 24);
  CHECK(count("G2") == 6);
}

TEST_CASE("highest roots") {
  auto highest = [](const std::string& t) {
    auto rs = RootSystem::build(parse_root_type(t));
    return rs.root_name(rs.highest_root());
  };
  CHECK(highest("A4") == "e1-e5");
  CHECK(highest("B4") == "e1+e2");
  CHECK(highest("C4") == "2e1");
  CHECK(highest("D5") == "e1+e2");
  CHECK(highest("E6") == "e4-e8");
  CHECK(highest("E7") == "e3-e8");
  CHECK(highest("E8") == "e1-e8");
  CHECK(highest("F4") == "e1-e4");
  CHECK(highest("G2") == "3δ+2ε");
}

TEST_CASE("E8 roots are exactly the even-sum norm-2 lattice vectors") {
  auto rs = RootSystem::build(parse_root_type("E8"));
  std::vector<QVector> expected;
  // Integer candidates with norm 2: two entries +-1.
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          QVector v = zero_vector(8);
          v[i] = Rational(si);
          v[j] = Rational(sj);
          expected.push_back(std::move(v));
        }
  // Half-integer candidates with even coordinate sum.
  for (unsigned m = 0; m < 256; ++m) {
    int minus = 0;
    for (unsigned b = m; b; b >>= 1) minus += static_cast<int>(b & 1);
    if (minus % 2) continue;
    QVector v(8, Rational(1, 2));
    for (std::size_t i = 0; i < 8; ++i)
      if (m & (1u << i)) v[i] = Rational(-1, 2);
    expected.push_back(std::move(v));
  }
  REQUIRE(expected.size() == 240);
  for (const auto& v : expected) CHECK(rs.is_root(v));
  CHECK(rs.positive_count() * 2 == expected.size());
}

TEST_CASE("F4 roots are the short, long, and half-integer vectors") {
  auto rs = RootSystem::build(parse_root_type("F4"));
  std::size_t found = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      QVector v = zero_vector(4);
      v[i] = Rational(s);
      CHECK(rs.is_root(v));
      ++found;
    }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          QVector v = zero_vector(4);
          v[i] = Rational(si);
          v[j] = Rational(sj);
          CHECK(rs.is_root(v));
          ++found;
        }
  for (unsigned m = 0; m < 16; ++m) {
    QVector v(4, Rational(1, 2));
    for (std::size_t i = 0; i < 4; ++i)
      if (m & (1u << i)) v[i] = Rational(-1, 2);
    CHECK(rs.is_root(v));
    ++found;
  }
  CHECK(found == 48);
  CHECK(rs.positive_count() * 2 == found);
}

TEST_CASE("sum_index matches coordinate addition") {
  auto rs = RootSystem::build(parse_root_type("A2"));
  auto i1 = rs.positive_index({Rational(1), Rational(-1), Rational(0)});
  auto i2 = rs.positive_index({Rational(0), Rational(1), Rational(-1)});
  REQUIRE(i1);
  REQUIRE(i2);
  auto s = rs.sum_index(*i1, *i2);
  REQUIRE(s);
  CHECK(rs.root_name(*s) == "e1-e3");
  CHECK(*s == rs.highest_index());
  CHECK_FALSE(rs.sum_index(*i1, *i1));
}

TEST_CASE("two_alpha_beta violations by family") {
  for (const std::string& t : {"A2", "A4", "A6", "D4", "D5", "D6", "E6", "E7", "E8"}) {
    auto rs = RootSystem::build(parse_root_type(t));
    CHECK_MESSAGE(rs.two_alpha_beta_violations().empty(), "family ", t);
  }
  for (const std::string& t : {"B2", "B3", "B6", "C2", "C4", "F4", "G2"}) {
    auto rs = RootSystem::build(parse_root_type(t));
    CHECK_MESSAGE(!rs.two_alpha_beta_violations().empty(), "family ", t);
  }
}

TEST_CASE("B3 exhibits the short-root violation at (e2, e1-e2)") {
  auto rs = RootSystem::build(parse_root_type("B3"));
  auto viol = rs.two_alpha_beta_violations();
  bool seen = false;
  for (auto [a, b] : viol)
    if (rs.root_name(a) == "e2" && rs.root_name(b) == "e1-e2") seen = true;
  CHECK(seen);

  auto beta = rs.positive_index({Rational(1), Rational(-1), Rational(0)});
  REQUIRE(beta);
  auto restricted = rs.two_alpha_beta_violations(std::vector<std::size_t>{*beta});
  REQUIRE(restricted.size() == 1);
  CHECK(rs.root_name(restricted[0].first) == "e2");
}

TEST_CASE("z2 sets match the published tables") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(z2_names(RootSystem::build(parse_root_type("B" + std::to_string(n)))) ==
          std::set<std::string>{"e1+e2", "e1+e3"});
  }
  for (int n = 4; n <= 6; ++n) {
    CHECK(z2_names(RootSystem::build(parse_root_type("D" + std::to_string(n)))) ==
          std::set<std::string>{"e1+e2", "e1+e3"});
  }
  CHECK(z2_names(RootSystem::build(parse_root_type("E8"))) ==
        std::set<std::string>{"e1-e8", "e2-e8"});
  CHECK(z2_names(RootSystem::build(parse_root_type("E7"))) ==
        std::set<std::string>{"e3-e8", "e4-e8"});
  CHECK(z2_names(RootSystem::build(parse_root_type("E6"))) ==
        std::set<std::string>{"e4-e8", "e5-e8"});
  CHECK(z2_names(RootSystem::build(parse_root_type("F4"))) ==
        std::set<std::string>{"e1-e4", "e2-e4"});
  CHECK(z2_names(RootSystem::build(parse_root_type("G2"))) ==
        std::set<std::string>{"3δ+2ε", "3δ+ε"});
}

TEST_CASE("z2 set for type A under the R^(n+1) realization") {
  for (int n = 2; n <= 6; ++n) {
    auto rs = RootSystem::build(parse_root_type("A" + std::to_string(n)));
    std::set<std::string> expected = {
        "e1-e" + std::to_string(n + 1),
        "e1-e" + std::to_string(n),
        "e2-e" + std::to_string(n + 1),
    };
    CHECK(z2_names(rs) == expected);
  }
  auto a1 = RootSystem::build(parse_root_type("A1"));
  CHECK(z2_names(a1) == std::set<std::string>{"e1-e2"});
}

TEST_CASE("pairwise z2 sums stay outside the root system for rank >= 3") {
  for (const std::string& t :
       {"A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "D4", "D5", "D6",
        "E6", "E7", "E8", "F4", "G2"}) {
    auto rs = RootSystem::build(parse_root_type(t));
    CHECK_MESSAGE(rs.z2_pairwise_sums_outside(), "family ", t);
  }
  // Boundary: in A2 the z2 set is all of the positive system and two of its
  // members add up to the highest root, which is still a root.
  CHECK_FALSE(RootSystem::build(parse_root_type("A2")).z2_pairwise_sums_outside());
}

TEST_CASE("G2 inner products come from the simple-root Gram matrix") {
  auto rs = RootSystem::build(parse_root_type("G2"));
  QVector delta = {Rational(1), Rational(0)};
  QVector eps = {Rational(0), Rational(1)};
  CHECK(rs.inner(delta, delta) == Rational(2));
  CHECK(rs.inner(eps, eps) == Rational(6));
  CHECK(rs.inner(delta, eps) == Rational(-3));
  CHECK(rs.inner(rs.highest_root(), rs.highest_root()) == Rational(6));
  QVector short_sum = {Rational(1), Rational(1)};
  CHECK(rs.inner(short_sum, short_sum) == Rational(2));
}

TEST_CASE("root names") {
  auto b3 = RootSystem::build(parse_root_type("B3"));
  CHECK(b3.root_name(QVector{Rational(1), Rational(-1), Rational(0)}) == "e1-e2");
  CHECK(b3.root_name(QVector{Rational(0), Rational(0), Rational(1)}) == "e3");
  auto c3 = RootSystem::build(parse_root_type("C3"));
  CHECK(c3.root_name(QVector{Rational(2), Rational(0), Rational(0)}) == "2e1");
  auto f4 = RootSystem::build(parse_root_type("F4"));
  QVector half = {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)};
  CHECK(f4.root_name(half) == "(e1-e2-e3-e4)/2");
  auto e8 = RootSystem::build(parse_root_type("E8"));
  QVector negpair = zero_vector(8);
  negpair[2] = Rational(-1);
  negpair[7] = Rational(-1);
  CHECK(e8.root_name(negpair) == "-e3-e8");
}

TEST_CASE("positive roots are lexicographically sorted and indexed") {
  for (const std::string& t : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    auto rs = RootSystem::build(parse_root_type(t));
    const auto& pos = rs.positive();
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) CHECK(lex_less(pos[i], pos[i + 1]));
    for (std::size_t i = 0; i < pos.size(); ++i) {
      auto idx = rs.positive_index(pos[i]);
      REQUIRE(idx);
      CHECK(*idx == i);
    }
  }
}
