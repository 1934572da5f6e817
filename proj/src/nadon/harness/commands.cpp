#include "nadon/harness/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "nadon/algebra/filtration_io.hpp"
#include "nadon/asymptotics/coercivity.hpp"
#include "nadon/asymptotics/fit.hpp"
#include "nadon/geometry/bergman.hpp"
#include "nadon/geometry/chern_weil.hpp"
#include "nadon/errors.hpp"
#include "nadon/harness/manifest.hpp"

namespace nadon {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path output_path(const ExperimentConfig& c, const std::string& file) {
  std::error_code ec;
  fs::create_directories(c.output_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create output directory " + c.output_dir + ": " + ec.message());
  return fs::path(c.output_dir) / file;
}

std::ofstream open_output(const ExperimentConfig& c, const std::string& file) {
  const fs::path p = output_path(c, file);
  std::ofstream out(p);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + p.string());
  return out;
}

json finish(const ExperimentConfig& c, RunManifest& m, json report, const std::string& file) {
  finish_manifest(m);
  report["manifest"] = manifest_to_json(m);
  open_output(c, file) << std::setw(2) << report << '\n';
  return report;
}

// Adds the stage to the message of anything thrown by f.
template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.rfind('[', 0) == 0) throw;
    throw Error(e.kind(), std::string("[") + stage + "] " + msg);
  }
}

json fd_tolerances(const ExperimentConfig& c) {
  return {{"fd_step", c.grid.fd_step}, {"fd_richardson", FdSettings{}.tolerance}};
}

MetricField make_metric(MetricKind kind, std::shared_ptr<const QuadratureGrid> grid,
                        const std::vector<int>& degrees, const Perturbation& p) {
  switch (kind) {
    case MetricKind::Round: return round_metric(std::move(grid), degrees);
    case MetricKind::Flat:
      if (std::any_of(degrees.begin(), degrees.end(), [](int a) { return a != 0; })) {
        throw Error(ErrorKind::InvalidConfig, "metric: flat needs a bundle of degree-0 summands");
      }
      return flat_metric(std::move(grid), static_cast<int>(degrees.size()));
    case MetricKind::Perturbed: return perturbed_metric(std::move(grid), degrees, p);
  }
  throw Error(ErrorKind::InvalidConfig, "metric: unknown kind");
}

json line_fit_json(const SlopeFitReport& r) {
  return {{"fitted_slope", r.calibration_sign * r.fitted_slope},
          {"raw_slope", r.fitted_slope},
          {"mna", to_string(r.mna)},
          {"relative_error", r.relative_error},
          {"window", {r.window.first, r.window.second}},
          {"calibration_sign", r.calibration_sign},
          {"residual", r.residual},
          {"sensitivity_slope", r.calibration_sign * r.sensitivity_slope},
          {"flagged", r.flagged}};
}

}  // namespace

std::vector<WeightedFiltration> configured_filtrations(const ExperimentConfig& c) {
  const FiltrationConfig& f = c.filtration;
  if (f.kind == FiltrationKind::File) {
    std::ifstream in(f.file);
    if (!in) throw Error(ErrorKind::Io, "filtration.file: cannot read " + f.file);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::InvalidConfig, "filtration.file: " + std::string(e.what()));
    }
    return corpus_from_json(j);
  }
  const SectionSpace space(SplitBundle(c.bundle), c.k);
  switch (f.kind) {
    case FiltrationKind::TwoStep: return {two_step_filtration(space, f.summands)};
    case FiltrationKind::Subspace: return {two_step_filtration(space, f.subspace)};
    case FiltrationKind::Explicit: return {WeightedFiltration(space, f.weights, f.spaces)};
    case FiltrationKind::Trivial: return {WeightedFiltration::trivial(space)};
    default: break;
  }
  throw Error(ErrorKind::InvalidConfig, "filtration: unknown kind");
}

json cmd_mna(const ExperimentConfig& c) {
  RunManifest m = begin_manifest("mna", c);
  const auto filts = staged("config", [&] { return configured_filtrations(c); });
  json results = json::array();
  for (const auto& f : filts) {
    const SheafInvariants inv = staged("algebra", [&] { return filtration_invariants(f, c.seed); });
    json r = invariants_to_json(f, inv);
    r["bundle"] = f.space().bundle().degrees();
    r["k"] = f.space().twist();
    r["filtration"] = filtration_to_json(f);
    results.push_back(std::move(r));
  }
  json report = results.size() == 1 ? results[0] : json{{"filtrations", results}};
  m.tolerances = {{"mna", 0}};
  return finish(c, m, std::move(report), "mna.json");
}

json cmd_slope_fit(const ExperimentConfig& c) {
  RunManifest m = begin_manifest("slope-fit", c);
  const auto filts = staged("config", [&] { return configured_filtrations(c); });
  if (filts.size() != 1) throw Error(ErrorKind::InvalidConfig, "[config] slope-fit needs a single filtration");
  const WeightedFiltration& f = filts[0];
  const auto t_grid = staged("config", [&] { return c.t_grid(); });
  // Fail before the expensive run if the tail window cannot hold two samples.
  if (static_cast<std::size_t>(std::ceil(kTailFraction * static_cast<double>(t_grid.size()))) < 2) {
    throw Error(ErrorKind::WindowTooShort,
                "[fit] t_grid has " + std::to_string(t_grid.size()) + " samples; the tail window needs 2");
  }
  const SheafInvariants inv = staged("algebra", [&] { return filtration_invariants(f, c.seed); });
  const Rational exact = mna(f, inv);

  const int sign = staged("calibration", [&] { return calibration_sign(c.seed); });
  m.calibration_sign = sign;

  RunOptions options;
  options.path_nodes = c.grid.path_nodes;
  const FunctionalTrace tr = staged("run", [&] {
    const BergmanOneParameterSubgroup ops(f, make_base_form(f.space(), c.base_form));
    return run_1ps(ops, inv, t_grid, QuadratureGrid(c.grid.n_rho, c.grid.n_theta), options);
  });
  const SlopeFitReport fit = staged("fit", [&] { return fit_slope(tr.t, tr.mdon, exact, sign); });
  const SandwichReport sw = sandwich_constants(tr.t, tr.mdon, exact.get_d(), sign);

  {
    std::ofstream csv = open_output(c, "trace.csv");
    write_trace_csv(csv, tr);
    std::ofstream plot = open_output(c, "plot.dat");
    plot << "# t mdon mna_t\n" << std::setprecision(17);
    for (std::size_t i = 0; i < tr.t.size(); ++i)
      plot << tr.t[i] << ' ' << sign * tr.mdon[i] << ' ' << exact.get_d() * tr.t[i] << '\n';
  }

  json report = line_fit_json(fit);
  report["weights"] = json::array();
  for (const auto& w : f.weights()) report["weights"].push_back(to_string(w));
  report["trace_free"] = sgn(f.trace()) == 0;
  report["within_unit_norm"] = f.within_unit_norm();
  report["sandwich"] = {{"lower", sw.lower}, {"upper", sw.upper}, {"bound", sw.bound}, {"within", sw.within}};
  try {
    const DivergenceReport d = distance_divergence_check(tr.t, tr.dist);
    report["distance"] = {{"increasing", d.increasing}, {"divergent", d.divergent}, {"exponent", d.exponent}};
  } catch (const Error& e) {
    report["distance"] = {{"error", e.what()}};
  }
  double recon = 0.0;
  for (double v : tr.reconstruction_error) recon = std::max(recon, v);
  json renorm = {{"reconstruction_error", recon}, {"singular_nodes", tr.singular_nodes},
                 {"offdiag_sup_final", tr.offdiag_sup.back()}, {"min_eig_final", tr.min_eig.back()}};
  if (f.steps() > 1) {
    try {
      renorm["offdiag_decay_rate"] = offdiagonal_decay_rate(tr.t, tr.offdiag_sup);
    } catch (const Error&) {
      renorm["offdiag_decay_rate"] = nullptr;
    }
  }
  report["renormalization"] = renorm;
  m.tolerances = {{"tail_fraction", kTailFraction},
                  {"sensitivity_fraction", kSensitivityFraction},
                  {"sensitivity_tolerance", kSensitivityTolerance},
                  {"condition_limit", options.condition_limit},
                  {"interior_radius", options.interior_radius},
                  {"divergence_exponent", kDivergenceExponent},
                  {"path_nodes", options.path_nodes}};
  return finish(c, m, std::move(report), "slope_fit.json");
}

json cmd_bergman_check(const ExperimentConfig& c) {
  RunManifest m = begin_manifest("bergman-check", c);
  const SplitBundle bundle(c.bundle);
  auto grid = std::make_shared<const QuadratureGrid>(c.grid.n_rho, c.grid.n_theta);
  const MetricField h = staged("metric", [&] { return make_metric(c.bergman_metric, grid, c.bundle, c.perturbation); });
  json table = json::object();
  json scaled = json::object();
  double lo = INFINITY, hi = 0.0, max_dev = 0.0;
  for (int k : c.bergman_k) {
    const BergmanReport r = staged("bergman", [&] {
      const SectionSpace space(bundle, k);
      return bergman_kernel_deviation(h, space);
    });
    table[std::to_string(k)] = r.deviation;
    scaled[std::to_string(k)] = r.deviation * k;
    lo = std::min(lo, r.deviation * k);
    hi = std::max(hi, r.deviation * k);
    max_dev = std::max(max_dev, r.deviation);
  }
  json report = {{"metric", metric_kind_name(c.bergman_metric)},
                 {"deviation", table},
                 {"deviation_times_k", scaled},
                 {"rate_ratio", lo > 0 ? hi / lo : 0.0},
                 {"rate_bounded", lo > 0 ? hi / lo <= 3.0 : max_dev < 1e-6},
                 {"max_deviation", max_dev}};
  m.tolerances = {{"rate_factor", 3.0}, {"round_deviation", 1e-6}};
  return finish(c, m, std::move(report), "bergman.json");
}

json cmd_saturate(const ExperimentConfig& c) {
  RunManifest m = begin_manifest("saturate", c);
  if (c.subspace.empty()) throw Error(ErrorKind::InvalidConfig, "[config] subspace: required for saturate");
  const SectionSpace space(SplitBundle(c.bundle), c.k);
  const SaturationResult s = staged("algebra", [&] { return saturated_invariants({space, c.subspace}, c.seed); });
  json report = saturation_to_json(s);
  report["bundle"] = c.bundle;
  report["k"] = c.k;
  report["generated_rank"] = generated_subsheaf_rank({space, c.subspace}, c.seed);
  m.tolerances = {{"saturation", 0}};
  return finish(c, m, std::move(report), "saturate.json");
}

json cmd_chern_weil(const ExperimentConfig& c) {
  RunManifest m = begin_manifest("chern-weil", c);
  if (c.subspace.empty()) throw Error(ErrorKind::InvalidConfig, "[config] subspace: required for chern-weil");
  const SectionSpace space(SplitBundle(c.bundle), c.k);
  auto grid = std::make_shared<const QuadratureGrid>(c.grid.n_rho, c.grid.n_theta);
  const MetricField h = staged("metric", [&] { return make_metric(c.metric, grid, c.bundle, c.perturbation); });
  const FdSettings fd{c.grid.fd_step, FdSettings{}.tolerance};
  const ChernWeilReport r = staged("chern-weil", [&] { return chern_weil_gap(h, {space, c.subspace}, fd, c.seed); });
  json report = {{"metric", metric_kind_name(c.metric)},
                 {"lhs", r.lhs},
                 {"rank", r.rank},
                 {"deg_saturation", r.degree},
                 {"second_fundamental_norm2", r.gap},
                 {"second_fundamental_direct", r.second_fundamental},
                 {"excluded_nodes", r.excluded_nodes}};
  m.tolerances = fd_tolerances(c);
  return finish(c, m, std::move(report), "chern_weil.json");
}

json cmd_corpus(const ExperimentConfig& c) {
  RunManifest m = begin_manifest("corpus", c);
  std::vector<std::vector<int>> bundles = c.corpus_bundles;
  if (bundles.empty()) bundles.push_back(c.bundle);
  ProbeSettings s;
  s.n_rho = c.grid.n_rho;
  s.n_theta = c.grid.n_theta;
  s.t_max = c.t_max;
  s.t_step = c.t_step;
  s.path_nodes = c.grid.path_nodes;
  s.base = c.base_form;
  s.seed = c.seed;
  s.calibration_sign = staged("calibration", [&] { return calibration_sign(c.seed); });
  m.calibration_sign = s.calibration_sign;

  json rows = json::array();
  bool all = true;
  for (const auto& d : bundles) {
    const ProbeReport p = staged("probe", [&] { return coercivity_probe(SplitBundle(d), s); });
    json entries = json::array();
    for (const auto& e : p.entries) {
      entries.push_back({{"summands", e.summands},
                         {"mna", to_string(e.mna)},
                         {"mna_sign", e.mna_sign},
                         {"fitted_slope", e.fitted_slope},
                         {"slope_sign", e.slope_sign},
                         {"agrees", e.agrees}});
    }
    json row = {{"bundle", d},
                {"k", p.k},
                {"verdict", stability_name(p.verdict.verdict)},
                {"vacuous", p.vacuous},
                {"entries", entries},
                {"agrees", p.agrees}};
    if (p.vacuous) row["note"] = "stable, vacuous corpus";
    all = all && p.agrees;
    rows.push_back(std::move(row));
  }
  json report = {{"bundles", rows}, {"agrees", all}};
  m.tolerances = {{"zero_slope", kZeroSlope}, {"tail_fraction", kTailFraction}};
  return finish(c, m, std::move(report), "corpus.json");
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"mna", "slope-fit", "bergman-check", "saturate", "chern-weil", "corpus"};
  return names;
}

json run_command(const std::string& name, const ExperimentConfig& config) {
  validate(config);
  if (name == "mna") return cmd_mna(config);
  if (name == "slope-fit") return cmd_slope_fit(config);
  if (name == "bergman-check") return cmd_bergman_check(config);
  if (name == "saturate") return cmd_saturate(config);
  if (name == "chern-weil") return cmd_chern_weil(config);
  if (name == "corpus") return cmd_corpus(config);
  throw Error(ErrorKind::InvalidConfig, "unknown command '" + name + "'");
}

}  // namespace nadon
