#include <doctest.h>

#include "nadon/algebra/qlinalg.hpp"
#include "nadon/algebra/qpoly.hpp"
#include "nadon/algebra/section_space.hpp"
#include "nadon/errors.hpp"

using namespace nadon;

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(lcm_of_denominators({Rational(1, 4), Rational(5, 6), Rational(2)}) == 12);
}

TEST_CASE("rank and nullspace over Q") {
  QMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  CHECK(rank(m) == 1);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("polynomial determinant") {
  // [[z, 1], [1, z]] has determinant z^2 - 1.
  const QPoly z = QPoly::monomial(1, 1), one = QPoly::monomial(1, 0);
  const QPoly d = determinant({{z, one}, {one, z}});
  CHECK(d == QPoly({Rational(-1), Rational(0), Rational(1)}));
  CHECK(d(Rational(3)) == 8);
}

TEST_CASE("h0 dimension counts") {
  CHECK(h0_dimension(SplitBundle({3}), 0) == 4);
  CHECK(h0_dimension(SplitBundle({1, -1}), 2) == 6);
  CHECK(h0_dimension(SplitBundle({-2}), 0) == 0);
  // Hilbert polynomial rk (k + 1) + deg once k is regular.
  for (const auto& d : std::vector<std::vector<int>>{{0, 0}, {2, 0, -2}, {1, -1}, {3}}) {
    const SplitBundle e(d);
    for (int k = e.regularity(); k < e.regularity() + 4; ++k) {
      CHECK(h0_dimension(e, k) == e.rank() * (k + 1) + e.degree());
      CHECK(SectionSpace(e, k).dimension() == static_cast<std::size_t>(h0_dimension(e, k)));
    }
  }
}

TEST_CASE("split bundle invariants and classification") {
  const SplitBundle e({2, 0, -2});
  CHECK(e.rank() == 3);
  CHECK(e.degree() == 0);
  CHECK(e.regularity() == 2);
  CHECK(SplitBundle({1, 0}).slope() == Rational(1, 2));
  CHECK(classify(SplitBundle({3})).verdict == Stability::Stable);
  CHECK(classify(SplitBundle({0, 0})).verdict == Stability::Polystable);
  const auto v = classify(SplitBundle({1, -1}));
  CHECK(v.verdict == Stability::Unstable);
  REQUIRE(v.witness_degree);
  CHECK(*v.witness_degree == 1);
  CHECK(*v.witness_summand == 0);
}

TEST_CASE("monomial basis and evaluation") {
  const SectionSpace o1(SplitBundle({1}), 0);
  REQUIRE(o1.dimension() == 2);
  CHECK(o1.basis()[0].x_power == 1);  // x first
  const QMatrix a = o1.evaluate({o1.unit_vector(0), o1.unit_vector(1)}, Rational(5));
  CHECK(a(0, 0) == 5);
  CHECK(a(0, 1) == 1);

  const SectionSpace s(SplitBundle({0, 0}), 1);
  CHECK(s.dimension() == 4);
  CHECK(s.basis()[2].factor == 1);
  const SectionSpace t(SplitBundle({1, -1}), 2);
  CHECK(t.factor_size(0) == 4);
  CHECK(t.factor_size(1) == 2);
  CHECK_THROWS_AS(SectionSpace(SplitBundle({1, -1}), 0), Error);
  try {
    SectionSpace(SplitBundle({1, -1}), 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TwistTooSmall);
  }
}
