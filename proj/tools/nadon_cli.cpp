// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nadon/nadon.h"

namespace {

struct Overrides {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<double> t_max;
  std::string grid;
};

int fail(nadon_status s) {
  std::cerr << "nadon: " << nadon_last_error() << '\n';
  return nadon_exit_code(s);
}

// "n_rho,n_theta"
bool parse_grid(const std::string& text, int& n_rho, int& n_theta) {
  std::istringstream in(text);
  char comma = 0;
  return (in >> n_rho >> comma >> n_theta) && comma == ',' && in.peek() == EOF;
}

int run(const std::string& command, const Overrides& o, bool quiet) {
  nadon_config* cfg = nullptr;
  nadon_status s = nadon_config_load(o.config.c_str(), &cfg);
  if (s != NADON_OK) return fail(s);
  struct Free {
    nadon_config* c;
    ~Free() { nadon_config_free(c); }
  } guard{cfg};

  if (!o.out.empty() && (s = nadon_config_set_output(cfg, o.out.c_str())) != NADON_OK) return fail(s);
  if (o.seed && (s = nadon_config_set_seed(cfg, *o.seed)) != NADON_OK) return fail(s);
  if (o.t_max && (s = nadon_config_set_t_max(cfg, *o.t_max)) != NADON_OK) return fail(s);
  if (!o.grid.empty()) {
    int nr = 0, nt = 0;
    if (!parse_grid(o.grid, nr, nt)) {
      std::cerr << "nadon: --grid: expected n_rho,n_theta\n";
      return 2;
    }
    if ((s = nadon_config_set_grid(cfg, nr, nt)) != NADON_OK) return fail(s);
  }

  nadon_report* rep = nullptr;
  s = nadon_run(cfg, command.c_str(), &rep);
  if (s != NADON_OK) return fail(s);
  if (!quiet) std::cout << nadon_report_json(rep) << '\n';
  nadon_report_free(rep);
  return 0;
}

std::string describe(const std::string& name) {
  if (name == "mna") return "exact non-Archimedean invariant of the configured filtration";
  if (name == "slope-fit") return "run the Bergman 1-PS and fit the slope of the Donaldson functional";
  if (name == "bergman-check") return "Bergman kernel deviation of a metric for increasing k";
  if (name == "saturate") return "rank and degree of the saturated subsheaf of a subspace";
  if (name == "chern-weil") return "Chern-Weil degree gap of a subsheaf";
  if (name == "corpus") return "coercivity probe over a list of split bundles";
  return name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Donaldson functional asymptotics on split bundles over P1"};
  app.set_version_flag("--version", std::string(nadon_version()));
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "do not print the report");

  Overrides o;
  for (int i = 0; i < nadon_command_count(); ++i) {
    const std::string name = nadon_command_name(i);
    auto* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--config", o.config, "YAML config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--seed", o.seed, "seed for randomized rank points");
    sub->add_option("--t-max", o.t_max, "largest t of the 1-PS grid");
    sub->add_option("--grid", o.grid, "quadrature grid n_rho,n_theta");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(app.get_subcommands().front()->get_name(), o, quiet);
}
