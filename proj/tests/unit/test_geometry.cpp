#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "nadon/geometry/bergman.hpp"
#include "nadon/geometry/chern_weil.hpp"
#include "nadon/geometry/curvature.hpp"
#include "nadon/geometry/donaldson.hpp"
#include "nadon/geometry/fubini_study.hpp"
#include "nadon/geometry/geodesic.hpp"
#include "nadon/geometry/quadrature.hpp"
#include "nadon/geometry/standard_metrics.hpp"
#include "support/oracles.hpp"

using namespace nadon;

namespace {
std::shared_ptr<const QuadratureGrid> grid(int n) { return std::make_shared<QuadratureGrid>(n, n); }
}  // namespace

TEST_CASE("quadrature has unit mass and integrates exactly") {
  const auto g = grid(16);
  std::vector<double> one(g->size(), 1.0), u2(g->size()), c1(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    const double u = std::cos((*g)[i].rho);
    u2[i] = u * u;
    // The round curvature density of O(1) integrates to its degree.
    c1[i] = 1.0;
  }
  CHECK(g->integrate(one) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g->integrate(u2) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(g->integrate(c1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Fubini-Study of the round and constant forms") {
  const SectionSpace o1(SplitBundle({1}), 0);
  const auto fs = FubiniStudy::from_form(o1, CMatrix::Identity(2, 2));
  for (cd z : {cd(0, 0), cd(0.3, -1.2), cd(4, 2)}) {
    CHECK(std::abs(fs.metric(z)(0, 0) - 1.0 / conformal(z)) < 1e-12);
    CHECK(std::abs(fs.lambda_curvature(z)(0, 0) - 1.0) < 1e-10);
  }
  const SectionSpace o0(SplitBundle({0}), 0);
  const auto c = FubiniStudy::from_form(o0, CMatrix::Constant(1, 1, 5.0));
  CHECK(std::abs(c.metric(cd(0.7, 0.1))(0, 0) - 5.0) < 1e-12);
}

TEST_CASE("analytic FS curvature matches differences and integrates to the degree") {
  const SectionSpace s(SplitBundle({2, 0, -1}), 2);
  std::mt19937_64 rng(5);
  const auto fs = FubiniStudy::from_form(s, random_form(s, rng, 0.8));
  const auto g = grid(24);
  const MetricFunction h = [&](cd z) { return fs.metric(z); };
  for (cd z : {cd(0.2, 0.1), cd(-0.9, 0.4), cd(2.5, -1.5)}) {
    const CMatrix a = fs.lambda_curvature(z);
    const CMatrix d = lambda_curvature_fd(h, s.bundle().degrees(), z, {});
    CHECK((a - d).norm() / a.norm() < 1e-6);
  }
  CHECK(curvature_integral(fs.field(g)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("round metric curvature by differences") {
  const auto g = grid(16);
  const MetricField h = perturbed_metric(g, {1, -1}, Perturbation{});
  CHECK(curvature_integral(h) == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
}

TEST_CASE("Donaldson functional examples") {
  const auto g = grid(24);
  const MetricField h0 = round_metric(g, {1, 1});
  // Constant rescaling: M1 = c deg, M2 = r c, so M = 0.
  const auto v = donaldson(h0.scaled(0.7), h0, 1.0, 16);
  CHECK(std::abs(v.mdon) < 1e-9);
  CHECK(v.m2 == doctest::Approx(2 * 0.7));

  // Line bundle: M(e^phi h, h) against the closed form.
  const double a[3] = {0.3, -0.2, 0.5};
  const auto e = round_metric(g, {0});
  const MetricFunction hp = [&](cd z) {
    const double q = conformal(z);
    const double phi = a[0] * 2 * z.real() / q + a[1] * 2 * z.imag() / q + a[2] * (2 - q) / q;
    return CMatrix::Constant(1, 1, std::exp(phi));
  };
  const MetricField h1(g, {0}, hp);
  const auto line = donaldson(h1, e, 0.0, 8);
  CHECK(line.mdon == doctest::Approx(oracle::line_bundle_donaldson(a[0], a[1], a[2])).epsilon(1e-6));
}

TEST_CASE("geodesic midpoints and distances") {
  const auto g = grid(12);
  const MetricField h0 = round_metric(g, {1, -1});
  const MetricField h1 = perturbed_metric(g, {1, -1}, Perturbation{});
  const MetricField mid = geodesic_point(h1, h0, 0.5);
  const double d = geodesic_distance(h1, h0);
  CHECK(geodesic_distance(mid, h0) == doctest::Approx(d / 2).epsilon(1e-9));
  CHECK(geodesic_distance(h0, h0) == doctest::Approx(0.0));
  CHECK(geodesic_distance(h0.scaled(1.0), h0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("Bergman kernel and L2 form") {
  const auto g = grid(16);
  const SectionSpace o1(SplitBundle({1}), 0);
  const CMatrix l2 = l2_form(round_metric(g, {1}), o1);
  CHECK(std::abs(l2(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(l2(0, 1)) < 1e-12);
  // Round metrics with equal degrees are balanced; unequal degrees give the
  // constant kernel diag(6, 4) * 2 / 10 on O(5) + O(3).
  CHECK(bergman_kernel_deviation(round_metric(g, {1, 1}), SectionSpace(SplitBundle({1, 1}), 3)).deviation < 1e-10);
  const SectionSpace s(SplitBundle({2, 0}), 3);
  CHECK(bergman_kernel_deviation(round_metric(g, {2, 0}), s).deviation == doctest::Approx(0.2).epsilon(1e-10));
  // Non-round metrics converge with k, roughly like 1/k.
  const MetricField h = perturbed_metric(grid(32), {2, 0}, Perturbation{});
  const double d4 = bergman_kernel_deviation(h, SectionSpace(SplitBundle({2, 0}), 4)).deviation;
  const double d8 = bergman_kernel_deviation(h, SectionSpace(SplitBundle({2, 0}), 8)).deviation;
  CHECK(d8 / d4 > 0.3);
  CHECK(d8 / d4 < 0.7);
}

TEST_CASE("Chern-Weil gap on split bundles") {
  const auto g = grid(24);
  // A summand of a round metric: II = 0, lhs = deg.
  const SectionSpace s(SplitBundle({1, -1}), 1);
  const auto sub = chern_weil_gap(round_metric(g, {1, -1}), {s, {s.unit_vector(0), s.unit_vector(1)}});
  CHECK(sub.rank == 1);
  CHECK(sub.degree == 1);
  CHECK(sub.lhs == doctest::Approx(1.0).epsilon(1e-6));
  // The tautological line in O + O has gap 1.
  const SectionSpace t(SplitBundle({0, 0}), 1);
  const auto taut = chern_weil_gap(flat_metric(g, 2), {t, {QVector{1, 0, 0, 1}}});
  CHECK(taut.degree == -1);
  CHECK(taut.gap == doctest::Approx(taut.second_fundamental).epsilon(1e-4));
  CHECK(taut.gap == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("path quadrature is converged at the default node count") {
  const auto g = grid(16);
  const MetricField h0 = round_metric(g, {1, -1});
  const MetricField h1 = perturbed_metric(g, {1, -1}, Perturbation{0.5, 0.3, 2});
  const double a = donaldson(h1, h0, 0.0, 16).mdon;
  const double b = donaldson(h1, h0, 0.0, 32).mdon;
  CHECK(std::abs(a - b) < 1e-6);
}
