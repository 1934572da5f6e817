#include <doctest.h>

#include <random>

#include "nadon/algebra/saturation.hpp"
#include "nadon/errors.hpp"
#include "support/oracles.hpp"

using namespace nadon;

namespace {
const SectionSpace o0sq(SplitBundle({0, 0}), 1);  // basis x e1, y e1, x e2, y e2
}

TEST_CASE("generated subsheaf rank") {
  CHECK(generated_subsheaf_rank({o0sq, {QVector{1, 0, 0, 0}, QVector{0, 1, 0, 0}}}) == 1);
  CHECK(generated_subsheaf_rank({o0sq, {QVector{1, 0, 0, 1}}}) == 1);
  std::vector<QVector> all;
  for (std::size_t b = 0; b < 4; ++b) all.push_back(o0sq.unit_vector(b));
  CHECK(generated_subsheaf_rank({o0sq, all}) == 2);
  CHECK_THROWS_AS(generated_subsheaf_rank({o0sq, {QVector{0, 0, 0, 0}}}), Error);
}

TEST_CASE("saturation of the tautological section") {
  const SaturationResult s = saturated_invariants({o0sq, {QVector{1, 0, 0, 1}}});
  CHECK(s.rank == 1);
  CHECK(s.degree == -1);
  // h0 = m + 1 at every auxiliary twist m.
  for (const auto& sample : s.trace) CHECK(sample.h0 == sample.m + 1);
}

TEST_CASE("saturation of a coordinate summand") {
  const SaturationResult s = saturated_invariants({o0sq, {QVector{1, 0, 0, 0}, QVector{0, 1, 0, 0}}});
  CHECK(s.rank == 1);
  CHECK(s.degree == 0);
  // One section x e1 alone still saturates to the summand.
  const SaturationResult one = saturated_invariants({o0sq, {QVector{1, 0, 0, 0}}});
  CHECK(one.degree == 0);
}

TEST_CASE("saturation of everything is the bundle") {
  const SectionSpace s(SplitBundle({2, 0, -2}), 2);
  std::vector<QVector> all;
  for (std::size_t b = 0; b < s.dimension(); ++b) all.push_back(s.unit_vector(b));
  const SaturationResult r = saturated_invariants({s, all});
  CHECK(r.rank == 3);
  CHECK(r.degree == 0);
}

TEST_CASE("saturation agrees with the minor oracle on random subspaces") {
  std::mt19937_64 rng(99);
  for (const auto& d : std::vector<std::vector<int>>{{2, 0, -2}, {1, 1}, {3, -1}}) {
    const SplitBundle e(d);
    const SectionSpace s(e, e.regularity());
    for (const auto& vs : oracle::small_subspaces(s, 2, 15, rng)) {
      const auto got = saturated_invariants({s, vs});
      const auto want = oracle::saturation_oracle(s, vs);
      CHECK(got.rank == want.rank);
      CHECK(got.degree == want.degree);
    }
  }
}

TEST_CASE("gcd oracle basics") {
  const QPoly a({Rational(-1), Rational(0), Rational(1)});  // z^2 - 1
  const QPoly b({Rational(1), Rational(1)});                // z + 1
  CHECK(oracle::poly_gcd(a, b) == QPoly({Rational(1), Rational(1)}));
  CHECK(oracle::poly_gcd(a, QPoly({Rational(2)})).degree() == 0);
}
