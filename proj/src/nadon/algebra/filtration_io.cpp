#include "nadon/algebra/filtration_io.hpp"

#include "nadon/errors.hpp"

namespace nadon {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::InvalidConfig, field + ": " + what);
}

const json& member(const json& j, const char* key) {
  if (!j.is_object()) bad("filtration", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(key, "missing");
  return *it;
}

Rational rational_from(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      bad(field, e.what());
    }
  }
  bad(field, "expected a rational string \"p/q\" or an integer");
}

}  // namespace

WeightedFiltration filtration_from_json(const json& j) {
  const json& b = member(j, "bundle");
  if (!b.is_array() || b.empty()) bad("bundle", "expected a nonempty array of integers");
  std::vector<int> degrees;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_number_integer()) bad("bundle[" + std::to_string(i) + "]", "expected an integer");
    degrees.push_back(b[i].get<int>());
  }
  const json& kj = member(j, "k");
  if (!kj.is_number_integer()) bad("k", "expected an integer");
  SectionSpace space(SplitBundle(degrees), kj.get<int>());

  const json& wj = member(j, "weights");
  if (!wj.is_array()) bad("weights", "expected an array");
  QVector weights;
  for (std::size_t i = 0; i < wj.size(); ++i)
    weights.push_back(rational_from(wj[i], "weights[" + std::to_string(i) + "]"));

  const json& sj = member(j, "subspaces");
  if (!sj.is_array()) bad("subspaces", "expected an array");
  std::vector<std::vector<QVector>> subspaces;
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const std::string field = "subspaces[" + std::to_string(i) + "]";
    if (!sj[i].is_array()) bad(field, "expected an array of vectors");
    std::vector<QVector> basis;
    for (std::size_t v = 0; v < sj[i].size(); ++v) {
      const std::string vf = field + "[" + std::to_string(v) + "]";
      if (!sj[i][v].is_array()) bad(vf, "expected an array of rationals");
      QVector vec;
      for (std::size_t c = 0; c < sj[i][v].size(); ++c)
        vec.push_back(rational_from(sj[i][v][c], vf + "[" + std::to_string(c) + "]"));
      basis.push_back(std::move(vec));
    }
    subspaces.push_back(std::move(basis));
  }
  return WeightedFiltration(std::move(space), std::move(weights), std::move(subspaces));
}

json filtration_to_json(const WeightedFiltration& f) {
  json out;
  out["bundle"] = f.space().bundle().degrees();
  out["k"] = f.space().twist();
  out["weights"] = json::array();
  for (const auto& w : f.weights()) out["weights"].push_back(to_string(w));
  out["subspaces"] = json::array();
  for (const auto& sub : f.subspaces()) {
    json basis = json::array();
    for (const auto& v : sub) {
      json vec = json::array();
      for (const auto& c : v) vec.push_back(to_string(c));
      basis.push_back(std::move(vec));
    }
    out["subspaces"].push_back(std::move(basis));
  }
  return out;
}

std::vector<WeightedFiltration> corpus_from_json(const json& j) {
  std::vector<WeightedFiltration> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      try {
        out.push_back(filtration_from_json(j[i]));
      } catch (const Error& e) {
        throw Error(e.kind(), "corpus[" + std::to_string(i) + "]." + e.what());
      }
    }
  } else {
    out.push_back(filtration_from_json(j));
  }
  return out;
}

json invariants_to_json(const WeightedFiltration& f, const SheafInvariants& inv) {
  const Rational m = mna(f, inv);
  const Rational mw = mna_weighted(f, inv);
  json out;
  out["mna"] = to_string(m);
  out["j"] = f.j();
  out["steps"] = json::array();
  for (const auto& s : inv.steps)
    out["steps"].push_back({{"q", s.q}, {"rank", s.rank}, {"degree", s.degree}});
  out["graded"] = json::array();
  for (const auto& g : inv.graded)
    out["graded"].push_back({{"weight", to_string(g.weight)}, {"rank", g.rank}, {"degree", g.degree}});
  out["mna_weighted"] = to_string(mw);
  out["identity_holds"] = (m == mw);
  // Linear scaling is the primary convention; the normalized value is
  // invariant under rescaling the generator.
  const Rational norm = f.max_abs_weight();
  out["mna_unit_norm"] = sgn(norm) == 0 ? std::string("0") : to_string(Rational(m / norm));
  out["weights"] = json::array();
  for (const auto& w : f.weights()) out["weights"].push_back(to_string(w));
  out["trace"] = to_string(f.trace());
  out["within_unit_norm"] = f.within_unit_norm();
  return out;
}

json saturation_to_json(const SaturationResult& s) {
  json out;
  out["rank"] = s.rank;
  out["degree"] = s.degree;
  out["trace"] = json::array();
  for (const auto& t : s.trace) out["trace"].push_back({{"m", t.m}, {"h0", t.h0}});
  return out;
}

}  // namespace nadon
