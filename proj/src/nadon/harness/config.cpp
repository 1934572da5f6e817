#include "nadon/harness/config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "nadon/algebra/section_space.hpp"
#include "nadon/asymptotics/run.hpp"
#include "nadon/errors.hpp"

namespace nadon {

namespace {

class Reader {
 public:
  explicit Reader(std::string name) : name_(std::move(name)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& what) const {
    std::string where = name_;
    if (node.IsDefined() && node.Mark().line >= 0) where += ":" + std::to_string(node.Mark().line + 1);
    throw Error(ErrorKind::InvalidConfig, where + ": " + field + ": " + what);
  }

  template <class T>
  T scalar(const YAML::Node& node, const std::string& field, const char* expected) const {
    if (!node.IsScalar()) fail(node, field, std::string("expected ") + expected);
    try {
      return node.as<T>();
    } catch (const YAML::Exception&) {
      fail(node, field, std::string("expected ") + expected);
    }
  }

  Rational rational(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a rational");
    try {
      return parse_rational(node.Scalar());
    } catch (const Error& e) {
      fail(node, field, e.what());
    }
  }

  std::vector<int> ints(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < node.size(); ++i)
      out.push_back(scalar<int>(node[i], field + "[" + std::to_string(i) + "]", "an integer"));
    return out;
  }

  std::vector<double> reals(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < node.size(); ++i)
      out.push_back(scalar<double>(node[i], field + "[" + std::to_string(i) + "]", "a number"));
    return out;
  }

  std::vector<QVector> vectors(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of coefficient vectors");
    std::vector<QVector> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
      const std::string f = field + "[" + std::to_string(i) + "]";
      if (!node[i].IsSequence()) fail(node[i], f, "expected a list of rationals");
      QVector v;
      for (std::size_t c = 0; c < node[i].size(); ++c)
        v.push_back(rational(node[i][c], f + "[" + std::to_string(c) + "]"));
      out.push_back(std::move(v));
    }
    return out;
  }

  void positive(const YAML::Node& node, const std::string& field, double v) const {
    if (!(v > 0)) fail(node, field, "must be positive");
  }

  void known_keys(const YAML::Node& node, const std::string& field,
                  std::initializer_list<const char*> keys) const {
    for (const auto& kv : node) {
      const std::string key = kv.first.as<std::string>();
      bool ok = false;
      for (const char* k : keys) ok = ok || key == k;
      if (!ok) fail(kv.first, field.empty() ? key : field + "." + key, "unknown key");
    }
  }

 private:
  std::string name_;
};

void read_filtration(const Reader& rd, const YAML::Node& n, ExperimentConfig& c) {
  if (!n.IsMap()) rd.fail(n, "filtration", "expected a table");
  rd.known_keys(n, "filtration", {"two_step", "subspace", "weights", "subspaces", "file", "trivial"});
  auto& f = c.filtration;
  int chosen = 0;
  if (n["two_step"]) {
    ++chosen;
    f.kind = FiltrationKind::TwoStep;
    f.summands.clear();
    for (int i : rd.ints(n["two_step"], "filtration.two_step")) {
      if (i < 0) rd.fail(n["two_step"], "filtration.two_step", "summand indices must be nonnegative");
      f.summands.push_back(static_cast<std::size_t>(i));
    }
  }
  if (n["subspace"]) {
    ++chosen;
    f.kind = FiltrationKind::Subspace;
    f.subspace = rd.vectors(n["subspace"], "filtration.subspace");
  }
  if (n["weights"] || n["subspaces"]) {
    ++chosen;
    f.kind = FiltrationKind::Explicit;
    if (!n["weights"] || !n["subspaces"]) {
      rd.fail(n, "filtration", "weights and subspaces must be given together");
    }
    if (!n["weights"].IsSequence()) rd.fail(n["weights"], "filtration.weights", "expected a list");
    for (std::size_t i = 0; i < n["weights"].size(); ++i)
      f.weights.push_back(rd.rational(n["weights"][i], "filtration.weights[" + std::to_string(i) + "]"));
    if (!n["subspaces"].IsSequence()) rd.fail(n["subspaces"], "filtration.subspaces", "expected a list");
    for (std::size_t i = 0; i < n["subspaces"].size(); ++i)
      f.spaces.push_back(rd.vectors(n["subspaces"][i], "filtration.subspaces[" + std::to_string(i) + "]"));
  }
  if (n["file"]) {
    ++chosen;
    f.kind = FiltrationKind::File;
    f.file = rd.scalar<std::string>(n["file"], "filtration.file", "a path");
  }
  if (n["trivial"]) {
    ++chosen;
    if (!rd.scalar<bool>(n["trivial"], "filtration.trivial", "true or false")) {
      rd.fail(n["trivial"], "filtration.trivial", "only 'true' is meaningful");
    }
    f.kind = FiltrationKind::Trivial;
  }
  if (chosen != 1) {
    rd.fail(n, "filtration", "give exactly one of two_step, subspace, weights/subspaces, file, trivial");
  }
}

}  // namespace

MetricKind parse_metric_kind(const std::string& name) {
  if (name == "round") return MetricKind::Round;
  if (name == "flat") return MetricKind::Flat;
  if (name == "perturbed") return MetricKind::Perturbed;
  throw Error(ErrorKind::InvalidConfig, "unknown metric '" + name + "' (round, flat, perturbed)");
}

const char* metric_kind_name(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::Round: return "round";
    case MetricKind::Flat: return "flat";
    case MetricKind::Perturbed: return "perturbed";
  }
  return "?";
}

std::vector<double> ExperimentConfig::t_grid() const {
  if (!t_values.empty()) return t_values;
  return uniform_t_grid(t_max, t_step);
}

ExperimentConfig parse_config(const std::string& text, const std::string& name) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw Error(ErrorKind::InvalidConfig,
                name + ":" + std::to_string(e.mark.line + 1) + ": syntax: " + e.msg);
  }
  const Reader rd(name);
  ExperimentConfig c;
  c.source_name = name;
  c.source_text = text;
  if (root.IsNull()) return c;
  if (!root.IsMap()) rd.fail(root, "config", "expected a table at top level");
  rd.known_keys(root, "", {"bundle", "k", "filtration", "grid", "t_grid", "output", "seed", "base_form",
                           "subspace", "metric", "perturbation", "bergman", "corpus"});

  bool k_given = false;
  if (root["bundle"]) {
    c.bundle = rd.ints(root["bundle"], "bundle");
    if (c.bundle.empty()) rd.fail(root["bundle"], "bundle", "needs at least one summand");
  }
  if (root["k"]) {
    c.k = rd.scalar<int>(root["k"], "k", "an integer");
    k_given = true;
  }
  if (!k_given) c.k = SplitBundle(c.bundle).regularity() + 1;
  if (root["filtration"]) read_filtration(rd, root["filtration"], c);

  if (const auto g = root["grid"]) {
    if (!g.IsMap()) rd.fail(g, "grid", "expected a table");
    rd.known_keys(g, "grid", {"n_rho", "n_theta", "fd_step", "path_nodes"});
    if (g["n_rho"]) {
      c.grid.n_rho = rd.scalar<int>(g["n_rho"], "grid.n_rho", "an integer");
      rd.positive(g["n_rho"], "grid.n_rho", c.grid.n_rho);
    }
    if (g["n_theta"]) {
      c.grid.n_theta = rd.scalar<int>(g["n_theta"], "grid.n_theta", "an integer");
      rd.positive(g["n_theta"], "grid.n_theta", c.grid.n_theta);
    }
    if (g["fd_step"]) {
      c.grid.fd_step = rd.scalar<double>(g["fd_step"], "grid.fd_step", "a number");
      rd.positive(g["fd_step"], "grid.fd_step", c.grid.fd_step);
    }
    if (g["path_nodes"]) {
      c.grid.path_nodes = rd.scalar<int>(g["path_nodes"], "grid.path_nodes", "an integer");
      rd.positive(g["path_nodes"], "grid.path_nodes", c.grid.path_nodes);
    }
  }
  if (const auto t = root["t_grid"]) {
    if (t.IsSequence()) {
      c.t_values = rd.reals(t, "t_grid");
      if (c.t_values.empty() || c.t_values.front() != 0.0) rd.fail(t, "t_grid", "must start at 0");
      for (std::size_t i = 1; i < c.t_values.size(); ++i)
        if (!(c.t_values[i] > c.t_values[i - 1])) rd.fail(t[i], "t_grid", "must be strictly increasing");
    } else if (t.IsMap()) {
      rd.known_keys(t, "t_grid", {"t_max", "step"});
      if (t["t_max"]) c.t_max = rd.scalar<double>(t["t_max"], "t_grid.t_max", "a number");
      if (t["step"]) {
        c.t_step = rd.scalar<double>(t["step"], "t_grid.step", "a number");
        rd.positive(t["step"], "t_grid.step", c.t_step);
      }
      if (!(c.t_max >= 0)) rd.fail(t["t_max"], "t_grid.t_max", "must be nonnegative");
    } else {
      rd.fail(t, "t_grid", "expected a list of times or a table {t_max, step}");
    }
  }
  if (root["output"]) c.output_dir = rd.scalar<std::string>(root["output"], "output", "a path");
  if (root["seed"]) c.seed = rd.scalar<std::uint64_t>(root["seed"], "seed", "a nonnegative integer");

  if (const auto b = root["base_form"]) {
    if (!b.IsMap()) rd.fail(b, "base_form", "expected a table");
    rd.known_keys(b, "base_form", {"kind", "epsilon", "seed"});
    if (b["kind"]) {
      try {
        c.base_form.kind = parse_base_form_kind(rd.scalar<std::string>(b["kind"], "base_form.kind", "a name"));
      } catch (const Error& e) {
        rd.fail(b["kind"], "base_form.kind", e.what());
      }
    }
    if (b["epsilon"]) c.base_form.epsilon = rd.scalar<double>(b["epsilon"], "base_form.epsilon", "a number");
    if (b["seed"]) c.base_form.seed = rd.scalar<std::uint64_t>(b["seed"], "base_form.seed", "an integer");
  }
  if (root["subspace"]) c.subspace = rd.vectors(root["subspace"], "subspace");
  if (root["metric"]) {
    try {
      c.metric = parse_metric_kind(rd.scalar<std::string>(root["metric"], "metric", "a name"));
    } catch (const Error& e) {
      rd.fail(root["metric"], "metric", e.what());
    }
  }
  if (const auto p = root["perturbation"]) {
    if (!p.IsMap()) rd.fail(p, "perturbation", "expected a table");
    rd.known_keys(p, "perturbation", {"amplitude", "coupling", "seed"});
    if (p["amplitude"]) c.perturbation.amplitude = rd.scalar<double>(p["amplitude"], "perturbation.amplitude", "a number");
    if (p["coupling"]) c.perturbation.coupling = rd.scalar<double>(p["coupling"], "perturbation.coupling", "a number");
    if (p["seed"]) c.perturbation.seed = rd.scalar<std::uint64_t>(p["seed"], "perturbation.seed", "an integer");
  }
  if (const auto b = root["bergman"]) {
    if (!b.IsMap()) rd.fail(b, "bergman", "expected a table");
    rd.known_keys(b, "bergman", {"k_values", "metric"});
    if (b["k_values"]) {
      c.bergman_k = rd.ints(b["k_values"], "bergman.k_values");
      if (c.bergman_k.empty()) rd.fail(b["k_values"], "bergman.k_values", "needs at least one twist");
    }
    if (b["metric"]) {
      try {
        c.bergman_metric = parse_metric_kind(rd.scalar<std::string>(b["metric"], "bergman.metric", "a name"));
      } catch (const Error& e) {
        rd.fail(b["metric"], "bergman.metric", e.what());
      }
    }
  }
  if (const auto cp = root["corpus"]) {
    if (!cp.IsMap()) rd.fail(cp, "corpus", "expected a table");
    rd.known_keys(cp, "corpus", {"bundles"});
    if (cp["bundles"]) {
      if (!cp["bundles"].IsSequence()) rd.fail(cp["bundles"], "corpus.bundles", "expected a list of bundles");
      for (std::size_t i = 0; i < cp["bundles"].size(); ++i) {
        const std::string f = "corpus.bundles[" + std::to_string(i) + "]";
        c.corpus_bundles.push_back(rd.ints(cp["bundles"][i], f));
        if (c.corpus_bundles.back().empty()) rd.fail(cp["bundles"][i], f, "needs at least one summand");
      }
    }
  }

  const int reg = SplitBundle(c.bundle).regularity();
  if (c.k < reg) {
    throw Error(ErrorKind::TwistTooSmall, name + ":" +
                                              (root["k"] ? std::to_string(root["k"].Mark().line + 1) : "0") +
                                              ": k: " + std::to_string(c.k) + " is below the regularity " +
                                              std::to_string(reg));
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

void validate(const ExperimentConfig& c) {
  if (c.grid.n_rho <= 0 || c.grid.n_theta <= 0) throw Error(ErrorKind::InvalidConfig, "grid: sizes must be positive");
  if (!(c.grid.fd_step > 0) || c.grid.path_nodes <= 0) {
    throw Error(ErrorKind::InvalidConfig, "grid: fd_step and path_nodes must be positive");
  }
  if (c.k < SplitBundle(c.bundle).regularity()) {
    throw Error(ErrorKind::TwistTooSmall, "k: below the regularity of the bundle");
  }
  c.t_grid();  // throws on a bad range
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  using nlohmann::json;
  auto vecs = [](const std::vector<QVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) {
      json row = json::array();
      for (const auto& x : v) row.push_back(to_string(x));
      a.push_back(row);
    }
    return a;
  };
  json f;
  switch (c.filtration.kind) {
    case FiltrationKind::TwoStep: f["two_step"] = c.filtration.summands; break;
    case FiltrationKind::Subspace: f["subspace"] = vecs(c.filtration.subspace); break;
    case FiltrationKind::Explicit: {
      json w = json::array();
      for (const auto& x : c.filtration.weights) w.push_back(to_string(x));
      f["weights"] = w;
      f["subspaces"] = json::array();
      for (const auto& s : c.filtration.spaces) f["subspaces"].push_back(vecs(s));
      break;
    }
    case FiltrationKind::File: f["file"] = c.filtration.file; break;
    case FiltrationKind::Trivial: f["trivial"] = true; break;
  }
  json out;
  out["bundle"] = c.bundle;
  out["k"] = c.k;
  out["filtration"] = f;
  out["grid"] = {{"n_rho", c.grid.n_rho}, {"n_theta", c.grid.n_theta}, {"fd_step", c.grid.fd_step},
                 {"path_nodes", c.grid.path_nodes}};
  out["t_grid"] = c.t_grid();
  out["seed"] = c.seed;
  out["base_form"] = {{"kind", base_form_kind_name(c.base_form.kind)},
                      {"epsilon", c.base_form.epsilon},
                      {"seed", c.base_form.seed}};
  out["subspace"] = vecs(c.subspace);
  out["metric"] = metric_kind_name(c.metric);
  out["perturbation"] = {{"amplitude", c.perturbation.amplitude},
                         {"coupling", c.perturbation.coupling},
                         {"seed", c.perturbation.seed}};
  out["bergman"] = {{"k_values", c.bergman_k}, {"metric", metric_kind_name(c.bergman_metric)}};
  out["corpus"] = {{"bundles", c.corpus_bundles}};
  return out;
}

}  // namespace nadon
