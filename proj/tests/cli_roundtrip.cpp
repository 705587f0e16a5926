#include <doctest.h>

#include "pixcat/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace pixcat;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PIXCAT_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string write_temp(const std::string& name, const Json& j) {
  std::string path = std::string("cli_tmp_") + name + ".json";
  std::ofstream out(path);
  out << j.dump(2);
  return path;
}

Json model_free1() { return Json{{"dimension", 1}, {"predicate", {{"kind", "free"}}}}; }

Json screen_z(int lo, int hi) {
  Json cuts = Json::array();
  for (int v = lo; v <= hi; ++v) cuts.push_back(Json{{"at", std::to_string(v)}, {"owner", "upper"}});
  return Json{{"factors", Json::array({Json{{"boundaries", cuts}}})}};
}

}  // namespace

TEST_CASE("pixelate is deterministic and round-trips") {
  std::string model = write_temp("model", model_free1());
  std::string screen = write_temp("screen", screen_z(0, 4));

  auto first = run_cli("pixelate --model " + model + " --screen " + screen);
  auto second = run_cli("pixelate --model " + model + " --screen " + screen);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  Json rep = Json::parse(first.output);
  CHECK(rep.at("status") == "pass");
  // the emitted screen re-parses to an equal value
  Screen parsed = screen_from_json(rep.at("payload").at("skeleton").at("screen"));
  CHECK(parsed == screen_from_json(screen_z(0, 4)));
  // and re-serializes to identical bytes
  CHECK(to_json(parsed).dump() == rep.at("payload").at("skeleton").at("screen").dump());
}

TEST_CASE("exit codes separate pass, fail and error") {
  std::string model = write_temp("model2", model_free1());
  std::string screen = write_temp("screen2", screen_z(0, 2));

  auto pass = run_cli("spec-zn 12");
  CHECK(pass.exit_code == 0);
  Json pj = Json::parse(pass.output);
  CHECK(pj.at("payload").at("opens") == 4);
  CHECK(pj.at("payload").at("points") == Json::array({"(2)", "(3)"}));

  auto error = run_cli("spec-zn 1");
  CHECK(error.exit_code == 2);
  Json ej = Json::parse(error.output);
  CHECK(ej.at("status") == "error");
  CHECK_FALSE(ej.at("witnesses").empty());

  // a failing check: the 4-chain against an interleaved partition
  Json cat;
  cat["objects"] = Json::array({"a", "b", "c", "d"});
  Json hom = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(i <= j ? 1 : 0);
    hom.push_back(row);
  }
  cat["hom"] = hom;
  std::string cat_path = write_temp("cat", cat);
  Json part;
  part["ground"] = Json::array({"a", "b", "c", "d"});
  part["blocks"] = Json::array({Json::array({"a", "c"}), Json::array({"b", "d"})});
  std::string part_path = write_temp("part", part);
  auto fail = run_cli("check-screen --cat " + cat_path + " --partition " + part_path);
  CHECK(fail.exit_code == 1);
  Json fj = Json::parse(fail.output);
  CHECK(fj.at("status") == "fail");
  CHECK_FALSE(fj.at("witnesses").empty());
}

TEST_CASE("partition commands round-trip the JSON wire format") {
  Json p, q;
  p["ground"] = Json::array({"1", "2", "3"});
  p["blocks"] = Json::array({Json::array({"1", "2"}), Json::array({"3"})});
  q["ground"] = Json::array({"1", "2", "3"});
  q["blocks"] = Json::array({Json::array({"1"}), Json::array({"2", "3"})});
  std::string pp = write_temp("p", p), qp = write_temp("q", q);

  auto meet_run = run_cli("partition meet --p " + pp + " --q " + qp);
  REQUIRE(meet_run.exit_code == 0);
  Json mj = Json::parse(meet_run.output);
  FinitePartition parsed = partition_from_json(mj.at("payload").at("partition"));
  CHECK(parsed.blocks().size() == 3);

  auto join_run = run_cli("partition join --p " + pp + " --q " + qp);
  REQUIRE(join_run.exit_code == 0);
  Json jj = Json::parse(join_run.output);
  CHECK(jj.at("payload").at("components") == 1);
}

TEST_CASE("aus subcommands emit machine-readable reports") {
  auto phi = run_cli("aus verify-phi -n 2 -m 2 --cuts 1/3,2/3");
  CHECK(phi.exit_code == 0);
  CHECK(Json::parse(phi.output).at("payload").at("vertices") == 3);

  auto resolve = run_cli("aus resolve -n 2 --x 1/4,1/2 --c 3/4");
  REQUIRE(resolve.exit_code == 0);
  Json rj = Json::parse(resolve.output);
  CHECK(rj.at("payload").at("projective_sources") ==
        Json::array({Json::array({"1/4", "1/2"}), Json::array({"1/4", "3/4"}),
                     Json::array({"1/2", "3/4"})}));
  CHECK(rj.at("payload").at("exact") == true);

  auto quiver = run_cli("aus quiver -n 2 -m 5");
  REQUIRE(quiver.exit_code == 0);
  Json qj = Json::parse(quiver.output);
  CHECK(qj.at("payload").at("vertices") == 15);
  CHECK(qj.at("payload").at("arrows") == 20);
}

TEST_CASE("oracle subcommand localizes a chain") {
  Json cat;
  cat["objects"] = Json::array({"x", "y", "z"});
  cat["hom"] = Json::array({Json::array({1, 1, 1}), Json::array({0, 1, 1}), Json::array({0, 0, 1})});
  std::string cat_path = write_temp("ocat", cat);
  std::string sigma_path = write_temp("osigma", Json::array({Json::array({"y", "z"})}));
  auto run = run_cli("oracle --cat " + cat_path + " --sigma " + sigma_path);
  REQUIRE(run.exit_code == 0);
  Json j = Json::parse(run.output);
  CHECK(j.at("payload").at("classes") == 2);
  CHECK(j.at("payload").at("category").at("objects").size() == 2);
}
