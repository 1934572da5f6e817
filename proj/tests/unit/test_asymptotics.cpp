#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>

#include "nadon/asymptotics/coercivity.hpp"
#include "nadon/asymptotics/fit.hpp"
#include "nadon/asymptotics/run.hpp"
#include "nadon/errors.hpp"
#include "nadon/geometry/geodesic.hpp"

using namespace nadon;

namespace {

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("least squares recovers a line") {
  const auto f = least_squares({0, 1, 2, 3}, {1, 3, 5, 7});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.residual < 1e-12);
  CHECK(kind_of([] { least_squares({1}, {1}); }) == ErrorKind::WindowTooShort);
}

TEST_CASE("slope fit of a synthetic trace") {
  std::vector<double> t, m;
  for (double x = 0; x <= 20.0 + 1e-9; x += 0.5) {
    t.push_back(x);
    m.push_back(-2 * x + std::sin(x) / 5);
  }
  const auto r = fit_slope(t, m, Rational(-2));
  CHECK(std::abs(r.fitted_slope + 2) < 0.05);
  CHECK(r.relative_error < 0.025);
  CHECK(r.window.first == doctest::Approx(10.0));
  CHECK(kind_of([] { fit_slope({0}, {0}, Rational(0)); }) == ErrorKind::WindowTooShort);
  const auto s = sandwich_constants(t, m, -2.0);
  CHECK(s.within);
  CHECK(s.lower <= 0.2 + 1e-12);
}

TEST_CASE("distance divergence check") {
  std::vector<double> t, lin, flat;
  for (double x = 0; x <= 6; x += 0.5) {
    t.push_back(x);
    lin.push_back(3 * x);
    flat.push_back(1 - std::exp(-x));
  }
  CHECK(distance_divergence_check(t, lin).divergent);
  CHECK(distance_divergence_check(t, lin).exponent == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(distance_divergence_check(t, flat).divergent);
}

TEST_CASE("the trivial filtration gives a constant path") {
  const SectionSpace s(SplitBundle({1, -1}), 2);
  const auto f = WeightedFiltration::trivial(s);
  const BergmanOneParameterSubgroup ops(f, make_base_form(s, {}));
  const QuadratureGrid g(12, 12);
  const auto tr = run_1ps(ops, filtration_invariants(f), uniform_t_grid(3, 1), g, {.path_nodes = 8});
  for (double m : tr.mdon) CHECK(std::abs(m) < 1e-12);
  for (double d : tr.dist) CHECK(std::abs(d) < 1e-12);
}

TEST_CASE("the 1-PS keeps det H_t and starts at the base form") {
  const SectionSpace s(SplitBundle({1, -1}), 2);
  const auto f = two_step_filtration(s, std::vector<std::size_t>{0});
  const CMatrix base = make_base_form(s, {});
  const BergmanOneParameterSubgroup ops(f, base);
  CHECK((ops.form(0) - base).norm() / base.norm() < 1e-12);
  const double d0 = std::log(std::abs(base.determinant()));
  for (double t : {1.0, 3.0}) CHECK(std::log(std::abs(ops.form(t).determinant())) == doctest::Approx(d0).epsilon(1e-9));
}

TEST_CASE("invalid t grids") {
  const SectionSpace s(SplitBundle({1, -1}), 2);
  const auto f = two_step_filtration(s, std::vector<std::size_t>{0});
  const BergmanOneParameterSubgroup ops(f, make_base_form(s, {}));
  const QuadratureGrid g(8, 8);
  const auto inv = filtration_invariants(f);
  CHECK(kind_of([&] { run_1ps(ops, inv, {1, 2}, g); }) == ErrorKind::InvalidConfig);
  CHECK(kind_of([&] { run_1ps(ops, inv, {0, 2, 1}, g); }) == ErrorKind::InvalidConfig);
}

TEST_CASE("coercivity probe on a stable line bundle is vacuous") {
  const auto r = coercivity_probe(SplitBundle({3}), {});
  CHECK(r.vacuous);
  CHECK(r.entries.empty());
  CHECK(r.agrees);
  CHECK(sign_with_threshold(0.01, kZeroSlope) == 0);
  CHECK(sign_with_threshold(-0.2, kZeroSlope) == -1);
}

TEST_CASE("the chart frame spread near the poles is not taken for degeneration") {
  // O(4) + O(2) + O(0) spreads by (1 + |z|^2)^4 in the chart frame alone.
  const SectionSpace s(SplitBundle({2, 0, -2}), 3);
  const auto f = two_step_filtration(s, std::vector<std::size_t>{0});
  const BergmanOneParameterSubgroup ops(f, make_base_form(s, {}));
  const QuadratureGrid g(24, 8);
  RunOptions o;
  o.path_nodes = 4;
  o.renormalize = false;
  CHECK_NOTHROW(run_1ps(ops, filtration_invariants(f), uniform_t_grid(6, 1), g, o));
  o.condition_limit = 10.0;
  CHECK(kind_of([&] { run_1ps(ops, filtration_invariants(f), uniform_t_grid(6, 1), g, o); }) ==
        ErrorKind::DivergedMetric);
}
