#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fragile/cli.hpp"
#include "fragile/constructions.hpp"
#include "fragile/measurement.hpp"
#include "fragile/state_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fragile::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "fragile_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("construct writes the Bernstein state") {
  const auto path = scratch("b4.json").string();
  REQUIRE(run({"construct", "bernstein", "--n", "4", "--out", path}).code == 0);
  const auto loaded = fragile::read_state(path);
  CHECK((loaded.state.amplitudes() - fragile::special_bernstein(4).amplitudes()).norm() < 1e-15);
}

TEST_CASE("independence report for B4") {
  const auto path = scratch("b4i.json").string();
  REQUIRE(run({"construct", "bernstein", "--n", "4", "--out", path}).code == 0);
  const auto r = run({"independence", "--state", path, "--axes", "zzzz", "--max-k", "4"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["independent_through"] == 3);
  CHECK(doc["max_checked"] == 4);
  const auto& last = doc["per_size"][2];
  CHECK(last["independent"] == false);
  CHECK(last["witness"] == "(++++)");
  CHECK(std::abs(last["joint"].get<double>()) < 1e-12);
  CHECK(std::abs(last["product"].get<double>() - 1.0 / 16) < 1e-12);

  CHECK(run({"independence", "--state", path, "--expect-through", "3"}).code == 0);
  CHECK(run({"independence", "--state", path, "--expect-through", "4"}).code == 1);
}

TEST_CASE("mermin quadruplets") {
  const auto r = run({"mermin", "--n", "4", "--max-size", "4"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["contradiction_count"] == 8);
  CHECK(doc["relations"].size() == 8);
  for (const auto& rel : doc["relations"]) CHECK(rel["measured"].get<double>() == doctest::Approx(rel["predicted"].get<int>()).epsilon(1e-12));
}

TEST_CASE("stats round trip equals the in-memory pipeline") {
  const auto path = scratch("g.json").string();
  REQUIRE(run({"construct", "general-bernstein", "--n", "5", "--random", "--seed", "7", "--out", path}).code == 0);
  const auto file_state = fragile::read_state(path).state;
  const auto r = run({"stats", "--state", path, "--expect-pass"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  const auto direct = fragile::outcome_distribution(file_state);
  for (const auto& entry : doc["distribution"]) {
    const auto idx = fragile::basis_index(fragile::parse_pattern(entry["bits"].get<std::string>()));
    CHECK(std::abs(entry["p"].get<double>() - direct[idx]) < 1e-12);
  }
  CHECK(doc["certificate"]["is_bernstein"] == true);

  // The JSON on stdout matches the written file.
  const auto stdout_state = run({"construct", "general-bernstein", "--n", "5", "--random", "--seed", "7"});
  const auto from_stdout = fragile::state_from_json(json::parse(stdout_state.out)).state;
  CHECK((from_stdout.amplitudes() - file_state.amplitudes()).norm() < 1e-12);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"construct", "general-bernstein", "--n", "4", "--random", "--seed", "11"},
      {"mermin", "--n", "5", "--max-size", "4"},
      {"orbit", "--phases", "0,0.5,1,1.5"}};
  for (const auto& cmd : commands) CHECK(run(cmd).out == run(cmd).out);
  CHECK(run(commands[0]).out != run({"construct", "general-bernstein", "--n", "4", "--random", "--seed", "12"}).out);
}

TEST_CASE("fragility subcommand") {
  const auto b = scratch("b3.json").string();
  REQUIRE(run({"construct", "bernstein", "--n", "3", "--out", b}).code == 0);
  const auto r = run({"fragility", "--state", b, "--expect-pass"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["fragile"] == true);
  CHECK(doc["per_particle"][0]["verdict"] == "separable");
  CHECK(doc["per_particle"][0]["splits"][0]["a"] == json::array({2}));

  const auto q = scratch("q.json").string();
  REQUIRE(run({"construct", "inhomogeneous", "--q", "0.25", "--out", q}).code == 0);
  const auto rq = run({"fragility", "--state", q, "--expect-pass"});
  CHECK(rq.code == 1);
  CHECK(json::parse(rq.out)["per_particle"][1]["verdict"] == "entangled");
}

TEST_CASE("orbit subcommand") {
  const auto r = run({"orbit", "--phases", "[0.25, 1.0, 0.5, 1.75]", "--expect-pass"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["n"] == 3);
  CHECK(doc["reachable"] == true);
  CHECK(doc["lattice_pi"][0]["numerators"] == json::array({1, 1, -1}));
  CHECK(doc["lattice_pi"][0]["denominator"] == 1);
  CHECK(doc["dimension_gap"]["bernstein_dim"] == 3);

  const auto miss = run({"orbit", "--n", "4", "--phases", "0,0,0,0,0,0,0,0.3", "--expect-pass"});
  CHECK(miss.code == 1);
  CHECK(json::parse(miss.out)["reachable"] == false);
  CHECK(run({"orbit", "--phases", "0,0,0"}).code == 2);
}

TEST_CASE("local phases on construct") {
  const auto r = run({"construct", "bernstein", "--n", "3", "--alphas", "1,1,-1"});
  REQUIRE(r.code == 0);
  const auto s = fragile::state_from_json(json::parse(r.out)).state;
  CHECK(std::abs(fragile::overlap(s, fragile::special_bernstein(3)) - 1.0) < 1e-12);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"teleport"}).code == 2);
  CHECK(run({"construct", "bernstein", "--n", "40"}).code == 2);
  CHECK(run({"construct", "ghz", "--n", "3", "--axis", "y"}).code == 2);
  CHECK(run({"stats", "--state", scratch("missing.json").string()}).code == 2);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{\"n\": 2, \"amps\": [{\"bits\": \"012\", \"re\": 1}]}";
  const auto r = run({"stats", "--state", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(run({"mermin", "--n", "3", "--max-size", "9"}).code == 2);
  CHECK(run({"mermin", "--n", "3", "--format", "yaml"}).code == 2);
  CHECK(run({"mermin", "--n", "3", "--tol-residual", "-1"}).code == 2);
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mermin") != std::string::npos);
}

TEST_CASE("table format") {
  const auto r = run({"mermin", "--n", "3", "--format", "table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1 contradiction set(s)") != std::string::npos);
}

TEST_CASE("config file and environment variable") {
  const auto cfg = scratch("cfg.json");
  std::ofstream(cfg) << R"({"format": "table", "tolerances": {"residual": 1e-8}})";
  const auto r = run({"mermin", "--n", "3", "--config", cfg.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("contradiction set(s)") != std::string::npos);

  ::setenv(fragile::cli::kConfigEnv, cfg.string().c_str(), 1);
  const auto env = run({"mermin", "--n", "3"});
  const auto overridden = run({"mermin", "--n", "3", "--format", "json"});
  ::unsetenv(fragile::cli::kConfigEnv);
  CHECK(env.out.find("contradiction set(s)") != std::string::npos);
  CHECK(json::parse(overridden.out)["contradiction_count"] == 1);

  const auto broken = scratch("broken.json");
  std::ofstream(broken) << R"({"tolerances": {"residual": 0}})";
  CHECK(run({"mermin", "--n", "3", "--config", broken.string()}).code == 2);
}
