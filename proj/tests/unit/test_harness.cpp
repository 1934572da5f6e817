#include <doctest.h>

#include <functional>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nadon/errors.hpp"
#include "nadon/harness/commands.hpp"
#include "nadon/harness/config.hpp"

using namespace nadon;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ExperimentConfig calibration(const std::string& out) {
  auto c = parse_config("bundle: [1, -1]\nk: 2\nfiltration:\n  two_step: [0]\n"
                        "grid: {n_rho: 12, n_theta: 12, path_nodes: 8}\nt_grid: {t_max: 3, step: 0.5}\n",
                        "calibration.yaml");
  c.output_dir = (std::filesystem::temp_directory_path() / out).string();
  return c;
}

std::vector<std::string> lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("config diagnostics carry file, line and field") {
  const auto m = message_of([] { parse_config("bundle: [1, -1]\nk: 2\ngrid:\n  n_rho: -4\n", "x.yaml"); });
  CHECK(m.find("x.yaml:4") != std::string::npos);
  CHECK(m.find("grid.n_rho") != std::string::npos);
  CHECK(message_of([] { parse_config("colour: red\n", "y.yaml"); }).find("colour") != std::string::npos);
  CHECK(message_of([] { parse_config("bundle: [a]\n", "z.yaml"); }).find("bundle[0]") != std::string::npos);
  try {
    parse_config("bundle: [2, -2]\nk: 0\n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TwistTooSmall);
  }
}

TEST_CASE("k defaults to one past the regularity") {
  CHECK(parse_config("bundle: [2, 0, -2]\n").k == 3);
}

TEST_CASE("mna command report") {
  const auto c = calibration("nadon_unit_mna");
  const auto r = cmd_mna(c);
  CHECK(r["mna"] == "-2");
  CHECK(r["j"] == 3);
  CHECK(r.contains("manifest"));
  CHECK(std::filesystem::exists(c.output_dir + "/mna.json"));

  auto t = c;
  t.filtration.kind = FiltrationKind::Trivial;
  CHECK(cmd_mna(t)["mna"] == "0");
}

TEST_CASE("slope-fit is deterministic for a fixed seed") {
  const auto a = calibration("nadon_unit_det_a");
  const auto b = calibration("nadon_unit_det_b");
  const auto ra = cmd_slope_fit(a);
  const auto rb = cmd_slope_fit(b);
  CHECK(ra["mna"] == rb["mna"]);
  CHECK(ra["manifest"]["config_hash"] == rb["manifest"]["config_hash"]);
  const auto la = lines(a.output_dir + "/trace.csv"), lb = lines(b.output_dir + "/trace.csv");
  REQUIRE(la.size() == lb.size());
  REQUIRE(la.size() > 2);
  CHECK(la[0] == "t,m1,m2,mdon,dist,offdiag_sup,min_eig");
  for (std::size_t i = 1; i < la.size(); ++i) {
    std::stringstream sa(la[i]), sb(lb[i]);
    for (std::string x, y; std::getline(sa, x, ',') && std::getline(sb, y, ',');)
      CHECK(std::abs(std::stod(x) - std::stod(y)) <= 1e-12 * (1 + std::abs(std::stod(x))));
  }
}

TEST_CASE("every command name dispatches") {
  CHECK(command_names().size() == 6);
  CHECK(message_of([] { run_command("nope", ExperimentConfig{}); }).find("nope") != std::string::npos);
}
