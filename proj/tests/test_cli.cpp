#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "schreier/report_io.hpp"

using namespace schreier;

namespace {

RunConfig config(const std::string& command, const std::string& inline_json) {
  RunConfig cfg;
  cfg.command = command;
  cfg.input = Json::parse(inline_json);
  return cfg;
}

}  // namespace

TEST_CASE("group-verify reports the kernel example") {
  auto cfg = config("group-verify", R"({"rank":2,"generators":["xx","xy","xY"]})");
  cfg.radius = 4;
  auto res = run_command(cfg);
  CHECK(res.exit_code == 0);
  Json rep = Json::parse(res.output);
  CHECK(rep["ok"] == true);
  CHECK(rep["result"]["classical"]["rank"] == 3);
  CHECK(rep["result"]["classical"]["index"] == 2);
  CHECK(rep["config"]["seed"] == 12345);
  CHECK(rep["version"] == library_version());
}

TEST_CASE("act-verify reports the worked subact example") {
  auto cfg = config("act-verify", R"({
    "alphabet": [{"name":"x","deg":1},{"name":"y","deg":1}],
    "act_basis": [{"name":"a","deg":0}],
    "generators": [["a","x"],["a","y","x"],["a","y","y"]]})");
  cfg.cap = 6;
  auto res = run_command(cfg);
  CHECK(res.exit_code == 0);
  Json rep = Json::parse(res.output);
  CHECK(rep["ok"] == true);
  CHECK(rep["result"]["basis_series"][1] == "1");
  CHECK(rep["result"]["basis_series"][2] == "2");
  CHECK(rep["result"]["rank_formula"]["holds"] == true);
}

TEST_CASE("mod-large on the bound-but-large example reports codim 1") {
  auto cfg = config("mod-large", R"({"example":"bound_large","s":2,"r":2,"bound":6})");
  auto res = run_command(cfg);
  CHECK(res.exit_code == 0);
  Json rep = Json::parse(res.output);
  CHECK(rep["result"]["witness"]["codim"] == 1);
  CHECK(rep["result"]["no_surjection"]["ok"] == true);
}

TEST_CASE("same config gives byte-identical reports") {
  auto cfg = config("group-surgery", R"({"rank":2})");
  cfg.radius = 4;
  cfg.seed = 777;
  auto a = run_command(cfg);
  auto b = run_command(cfg);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("explicit surgery swaps the basepoint loop into a crossing pair") {
  // <x, y^2, yxY> and the mod-2 kernel share sphere counts (1,1) but not
  // their generator-length census
  auto cfg = config("group-surgery", R"({
    "rank": 2, "generators": ["x", "yy", "yxY"],
    "e1": {"from": 0, "label": "x"},
    "e2": {"from": 1, "label": "x"}})");
  cfg.radius = 4;
  auto res = run_command(cfg);
  CHECK(res.exit_code == 0);
  Json rep = Json::parse(res.output);
  CHECK(rep["result"]["spheres_equal"] == true);
  CHECK(rep["result"]["degree_profile_equal"] == true);
  CHECK(rep["result"]["b_differs"] == true);
  CHECK(rep["result"]["b_before"][1] == 2);
  CHECK(rep["result"]["b_after"][2] == 6);

  // tree edges are rejected
  auto bad = config("group-surgery", R"({
    "rank": 2, "generators": ["x", "yy", "yxY"],
    "e1": {"from": 0, "label": "y"},
    "e2": {"from": 1, "label": "y"}})");
  bad.radius = 4;
  CHECK(run_command(bad).exit_code == 2);
}

TEST_CASE("usage errors exit with code 2 and a machine-readable error") {
  auto bad = run_command(config("act-verify", R"({"alphabet": []})"));
  CHECK(bad.exit_code == 2);
  Json rep = Json::parse(bad.output);
  CHECK(rep.contains("error"));
  CHECK(rep["error"]["message"].is_string());

  auto unknown = run_command(config("no-such-command", "{}"));
  CHECK(unknown.exit_code == 2);

  // precondition violation: largeness needs p > q
  auto pre = run_command(config("mod-large", R"({
    "algebra":"assoc","rank":2,"generators":["u1"],
    "relators":[[["u1","x1"]]]})"));
  CHECK(pre.exit_code == 2);
}

TEST_CASE("csv output flattens series one row per degree") {
  auto cfg = config("group-series", R"({"rank":2,"generators":["x"]})");
  cfg.radius = 3;
  cfg.format = "csv";
  auto res = run_command(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("field,index,value") == 0);
  CHECK(res.output.find("result.v,0,1") != std::string::npos);
  CHECK(res.output.find("result.v,1,2") != std::string::npos);
  CHECK(res.output.find("result.v,2,6") != std::string::npos);
}

TEST_CASE("dot output draws group graphs and rejects act inputs") {
  auto cfg = config("group-series", R"({"rank":2,"generators":["xx","xy","xY"]})");
  cfg.format = "dot";
  auto res = run_command(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("digraph core") != std::string::npos);
  CHECK(res.output.find("digraph coset") != std::string::npos);

  auto bad = config("act-basis", R"({"alphabet":[{"name":"x","deg":1}]})");
  bad.format = "dot";
  CHECK(run_command(bad).exit_code == 2);
}

TEST_CASE("regress runs the shipped corpus deterministically") {
  auto a = run_regress(SCHREIER_CORPUS_DIR);
  CHECK(a.exit_code == 0);
  CHECK(a.table.find("0 failed") != std::string::npos);
  auto b = run_regress(SCHREIER_CORPUS_DIR);
  CHECK(a.table == b.table);
}

TEST_CASE("regress edge cases: empty dir, missing dir, corrupted file") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "schreier_regress_test";
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  auto empty = run_regress(tmp.string());
  CHECK(empty.exit_code == 0);
  CHECK(empty.table.find("0 cases") != std::string::npos);

  CHECK(run_regress((tmp / "missing").string()).exit_code == 2);

  {
    std::ofstream good(tmp / "a_good.json");
    good << R"({"command":"group-series","radius":3,"input":{"rank":2,"generators":["x"]}})";
    std::ofstream bad(tmp / "b_broken.json");
    bad << "{ this is not json";
  }
  auto mixed = run_regress(tmp.string());
  CHECK(mixed.exit_code == 1);
  CHECK(mixed.table.find("a_good") != std::string::npos);
  CHECK(mixed.table.find("PASS") != std::string::npos);
  CHECK(mixed.table.find("ERROR") != std::string::npos);
  fs::remove_all(tmp);
}

TEST_CASE("every advertised subcommand dispatches") {
  // minimal valid inputs per subcommand; all must complete without exit 2
  std::vector<std::pair<std::string, std::string>> cases = {
      {"act-basis", R"({"alphabet":[{"name":"x","deg":1}],"act_basis":[{"name":"a","deg":0}],"generators":[["a"]]})"},
      {"act-verify", R"({"alphabet":[{"name":"x","deg":1}],"act_basis":[{"name":"a","deg":0}],"generators":[["a"]]})"},
      {"act-grassmann", R"({"alphabet":[{"name":"x","deg":1}],"act_basis":[{"name":"a","deg":0}],"p_generators":[["a"]],"q_generators":[["a","x"]]})"},
      {"group-series", R"({"rank":2,"generators":["x","y"]})"},
      {"group-verify", R"({"rank":2,"generators":["x","y"]})"},
      {"group-even", R"({"rank":2,"generators":["xx","xy","xY"]})"},
      {"group-surgery", R"({"rank":2})"},
      {"group-enum", R"({"rank":2,"max_index":2})"},
      {"mod-basis", R"({"s":1,"r":2,"generators":["u1.x1"]})"},
      {"mod-verify", R"({"s":1,"r":2,"generators":["u1.x1"]})"},
      {"mod-affine", R"({"algebra":"assoc","rank":2,"generators":["u1"],"relators":[[["u1","x1x2"]]]})"},
      {"mod-large", R"({"algebra":"assoc","rank":2,"generators":["u1","u2"],"relators":[[["u1","x1"]]]})"},
      {"mod-nilparts", R"({"j":[1,1]})"},
  };
  for (const auto& [cmd, input] : cases) {
    CAPTURE(cmd);
    auto res = run_command(config(cmd, input));
    CHECK(res.exit_code == 0);
  }
}
