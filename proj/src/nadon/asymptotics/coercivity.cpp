#include "nadon/asymptotics/coercivity.hpp"

#include <cmath>

#include "nadon/errors.hpp"

namespace nadon {

int sign_with_threshold(double x, double zero) noexcept {
  if (std::abs(x) <= zero) return 0;
  return x > 0 ? 1 : -1;
}

ProbeReport coercivity_probe(const SplitBundle& bundle, const ProbeSettings& settings) {
  ProbeReport rep{bundle, bundle.regularity() + 1, classify(bundle), false, {}, true};
  const SectionSpace space(bundle, rep.k);
  const std::size_t r = static_cast<std::size_t>(bundle.rank());
  const QuadratureGrid grid(settings.n_rho, settings.n_theta);
  const auto t_grid = uniform_t_grid(settings.t_max, settings.t_step);
  RunOptions options;
  options.path_nodes = settings.path_nodes;
  options.renormalize = false;
  const CMatrix base = make_base_form(space, settings.base);

  bool any_negative = false;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << r); ++mask) {
    ProbeEntry e;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) e.summands.push_back(i);
    const WeightedFiltration f = two_step_filtration(space, e.summands);
    const SheafInvariants inv = filtration_invariants(f, settings.seed);
    e.mna = mna(f, inv);
    const BergmanOneParameterSubgroup ops(f, base);
    const FunctionalTrace tr = run_1ps(ops, inv, t_grid, grid, options);
    const SlopeFitReport fit = fit_slope(tr.t, tr.mdon, e.mna, settings.calibration_sign);
    e.fitted_slope = settings.calibration_sign * fit.fitted_slope;
    e.mna_sign = sgn(e.mna);
    e.slope_sign = sign_with_threshold(e.fitted_slope, kZeroSlope);
    e.agrees = e.mna_sign == e.slope_sign;
    rep.agrees = rep.agrees && e.agrees;
    any_negative = any_negative || e.mna_sign < 0;
    rep.entries.push_back(std::move(e));
  }
  rep.vacuous = rep.entries.empty();
  rep.agrees = rep.agrees && (any_negative == (rep.verdict.verdict == Stability::Unstable));
  return rep;
}

int calibration_sign(std::uint64_t seed) {
  const SectionSpace space(SplitBundle({1, -1}), 2);
  const WeightedFiltration f = two_step_filtration(space, std::vector<std::size_t>{0});
  const SheafInvariants inv = filtration_invariants(f, seed);
  const BergmanOneParameterSubgroup ops(f, make_base_form(space, {BaseFormKind::Round}));
  RunOptions options;
  options.renormalize = false;
  options.path_nodes = 16;
  const FunctionalTrace tr = run_1ps(ops, inv, uniform_t_grid(4.0, 0.5), QuadratureGrid(16, 16), options);
  const SlopeFitReport fit = fit_slope(tr.t, tr.mdon, mna(f, inv));
  const int s = sign_with_threshold(fit.fitted_slope, kZeroSlope);
  if (s == 0) throw Error(ErrorKind::InvariantViolation, "calibration run has zero slope");
  return s * sgn(mna(f, inv));
}

}  // namespace nadon
