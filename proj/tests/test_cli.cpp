#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "graph.hpp"
#include "helpers.hpp"

using namespace vint;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(VINT_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("vint_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string graph_file(const std::string& name, const Graph& g) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  write_graph(out, g);
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sep_csv(const json& report) {
  std::string csv;
  for (const auto& v : report.at("separator")) {
    if (!csv.empty()) csv += ",";
    csv += std::to_string(int64_t(v));
  }
  return csv;
}

}  // namespace

TEST_CASE("solve reports the named values across algorithms") {
  std::string p8 = graph_file("p8.gr", vt::path(8));
  for (std::string algo : {"oracle", "vc", "ml", "mw"}) {
    RunResult r = run_cli("solve " + p8 + " --algo " + algo);
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("value") == 4);
    CHECK(rep.at("algorithm") == algo);
    CHECK(rep.at("problem") == "vi");
    CHECK(rep.at("max_component") <= 4);
    CHECK(rep.at("components_count").get<int>() >= 1);
    CHECK(rep.at("nodes_expanded").get<int64_t>() >= 0);
    CHECK(rep.at("params").at("fes") == 0);
    CHECK(rep.at("time_ms").get<double>() >= 0.0);
  }
  RunResult nat = run_cli("solve " + p8 + " --algo natural --k 4");
  CHECK(nat.code == 0);
  json nrep = json::parse(nat.out);
  CHECK(nrep.at("value") == 4);
  CHECK(nrep.at("answer") == "yes");

  std::string k5 = graph_file("k5.gr", vt::complete(5));
  json krep = json::parse(run_cli("solve " + k5 + " --algo oracle").out);
  CHECK(krep.at("value") == 5);

  std::string c9 = graph_file("c9.gr", vt::cycle(9));
  RunResult coc = run_cli("solve " + c9 + " --problem coc --ell 2");
  CHECK(coc.code == 0);
  json crep = json::parse(coc.out);
  CHECK(crep.at("value") == 3);
  CHECK(crep.at("ell") == 2);
  CHECK(crep.at("max_component") <= 2);
}

TEST_CASE("decision mode sets the answer and the exit code") {
  std::string p8 = graph_file("p8.gr", vt::path(8));
  RunResult yes = run_cli("solve " + p8 + " --k 4");
  CHECK(yes.code == 0);
  CHECK(json::parse(yes.out).at("answer") == "yes");

  RunResult no = run_cli("solve " + p8 + " --k 3");
  CHECK(no.code == 1);
  CHECK(json::parse(no.out).at("answer") == "no");

  RunResult nat_no = run_cli("solve " + p8 + " --algo natural --k 3");
  CHECK(nat_no.code == 1);
  json rep = json::parse(nat_no.out);
  CHECK(rep.at("answer") == "no");
  CHECK(rep.at("k") == 3);
}

TEST_CASE("verify accepts valid claims and prices invalid ones") {
  std::string p8 = graph_file("p8.gr", vt::path(8));
  RunResult ok = run_cli("verify " + p8 + " --sep 4,7 --claim 5");
  CHECK(ok.code == 0);
  json okr = json::parse(ok.out);
  CHECK(okr.at("verified") == true);
  CHECK(okr.at("separator_cost") == 2);
  CHECK(okr.at("max_component") == 3);

  RunResult bad = run_cli("verify " + p8 + " --sep 4,7 --claim 4");
  CHECK(bad.code == 1);
  json badr = json::parse(bad.out);
  CHECK(badr.at("verified") == false);
  CHECK(badr.at("total") == 5);

  std::string k1 = graph_file("k1.gr", Graph(1));
  CHECK(run_cli("verify " + k1 + " --claim 1").code == 0);

  // component-order verification needs the bound and checks both halves
  std::string c9 = graph_file("c9.gr", vt::cycle(9));
  CHECK(run_cli("verify " + c9 + " --problem coc --ell 2 --sep 1,4,7 --claim 3").code == 0);
  CHECK(run_cli("verify " + c9 + " --problem coc --ell 2 --sep 1,4,7 --claim 2").code == 1);
  CHECK(run_cli("verify " + c9 + " --problem coc --ell 1 --sep 1,4,7 --claim 3").code == 1);
}

TEST_CASE("every solve report re-verifies against its own value") {
  std::vector<std::pair<std::string, Graph>> inputs = {
      {"p8.gr", vt::path(8)},
      {"k23.gr", vt::complete_bipartite(2, 3)},
      {"r1.gr", vt::random_graph(10, 0.3, 41)},
      {"w1.gr", vt::random_weighted(9, 0.35, 42, 5)},
  };
  for (const auto& [name, g] : inputs) {
    std::string path = graph_file(name, g);
    std::string problem = g.unit_weights() ? "vi" : "wvi";
    RunResult solved = run_cli("solve " + path + " --problem " + problem);
    REQUIRE(solved.code == 0);
    json rep = json::parse(solved.out);
    std::string claim = std::to_string(int64_t(rep.at("value")));
    RunResult checked = run_cli("verify " + path + " --problem " + problem + " --sep '" +
                                sep_csv(rep) + "' --claim " + claim);
    CHECK(checked.code == 0);
  }
}

TEST_CASE("params reports the structural quantities") {
  std::string c5 = graph_file("c5.gr", vt::cycle(5));
  json rep = json::parse(run_cli("params " + c5).out);
  CHECK(rep.at("n") == 5);
  CHECK(rep.at("m") == 5);
  CHECK(rep.at("fes") == 1);
  CHECK(rep.at("x") == 0);
  CHECK(rep.at("vc") == 3);
  CHECK(rep.at("mw") == 5);

  std::string k23 = graph_file("k23.gr", vt::complete_bipartite(2, 3));
  json k23r = json::parse(run_cli("params " + k23).out);
  CHECK(k23r.at("mw") == 2);
  CHECK(k23r.at("fes") == 2);

  std::string tree = graph_file("star6.gr", vt::star(6));
  json treer = json::parse(run_cli("params " + tree).out);
  CHECK(treer.at("fes") == 0);
  CHECK(treer.at("vc") == 1);
}

TEST_CASE("seeded generation is byte-deterministic and self-describing") {
  std::string out1 = (work_dir() / "rand1.gr").string();
  std::string out2 = (work_dir() / "rand2.gr").string();
  RunResult g1 = run_cli("gen --kind random --n 10 --prob 0.4 --seed 7 --out " + out1);
  RunResult g2 = run_cli("gen --kind random --n 10 --prob 0.4 --seed 7 --out " + out2);
  CHECK(g1.code == 0);
  CHECK(g2.code == 0);
  CHECK(read_file(out1) == read_file(out2));
  CHECK(read_file(out1 + ".json") == read_file(out2 + ".json"));

  json sidecar = json::parse(g1.out);
  CHECK(sidecar.at("kind") == "random");
  CHECK(sidecar.at("seed") == 7);
  CHECK(sidecar.at("params").at("n") == 10);
  REQUIRE(sidecar.at("truth").is_object());
  int64_t truth = sidecar.at("truth").at("vi");

  // the emitted file actually carries that optimum
  RunResult solved = run_cli("solve " + out1 + " --algo oracle");
  CHECK(json::parse(solved.out).at("value") == truth);

  // a different seed gives different bytes
  std::string out3 = (work_dir() / "rand3.gr").string();
  run_cli("gen --kind random --n 10 --prob 0.4 --seed 8 --out " + out3);
  CHECK(read_file(out1) != read_file(out3));
}

TEST_CASE("reduce emits certified gadget instances") {
  std::string k3 = graph_file("k3.gr", vt::complete(3));
  std::string out = (work_dir() / "bdd.gr").string();
  RunResult r = run_cli("reduce --kind bdd-to-coc --in " + k3 + " --k 1 --d 1 --out " + out);
  CHECK(r.code == 0);
  json sidecar = json::parse(r.out);
  CHECK(sidecar.at("params").at("ell") == 2);
  CHECK(sidecar.at("params").at("p") == 4);
  CHECK(sidecar.at("params").at("n") == 12);
  CHECK(sidecar.at("truth") == "yes");
  CHECK(sidecar.at("labels").size() == 12);

  // the emitted graph solves to the promised component-order value
  RunResult coc = run_cli("solve " + out + " --problem coc --ell 2 --algo oracle");
  CHECK(coc.code == 0);
  CHECK(json::parse(coc.out).at("value").get<int64_t>() <= 4);

  // infeasible source is certified as a no-instance
  std::string out_no = (work_dir() / "bdd_no.gr").string();
  json no_car = json::parse(
      run_cli("reduce --kind bdd-to-coc --in " + k3 + " --k 0 --d 1 --out " + out_no).out);
  CHECK(no_car.at("truth") == "no");
}

TEST_CASE("reduce runs the two-step semi-weighted chain") {
  std::string p3 = graph_file("p3.gr", vt::path(3));
  std::string mid = (work_dir() / "swvi.gr").string();
  json mid_car = json::parse(
      run_cli("reduce --kind swcoc-to-swvi --in " + p3 + " --ell 1 --p 1 --out " + mid).out);
  CHECK(mid_car.at("params").at("k") == 3);
  CHECK(mid_car.at("params").at("n") == 10);
  CHECK(mid_car.at("truth") == "yes");

  std::string last = (work_dir() / "uvi.gr").string();
  json last_car =
      json::parse(run_cli("reduce --kind swvi-to-uvi --in " + mid + " --k 3 --out " + last).out);
  CHECK(last_car.at("truth") == "yes");
  int64_t k = last_car.at("params").at("k");
  CHECK(run_cli("solve " + last + " --k " + std::to_string(k)).code == 0);
}

TEST_CASE("reduce surfaces gadget rejections as input errors") {
  RunResult r = run_cli(
      "reduce --kind rubp-to-swcoc --items 1,1,2 --pairs 1-2,1-2,1-2 --k 2 --out " +
          (work_dir() / "never.gr").string(),
      true);
  CHECK(r.code == 2);
  CHECK(r.out.find("balancer weight -2") != std::string::npos);

  RunResult ok = run_cli(
      "reduce --kind rubp-to-swcoc --items 2,2,4 --pairs 1-2,1-2,1-2 --k 2 --out " +
      (work_dir() / "rubp.gr").string());
  CHECK(ok.code == 0);
  json car = json::parse(ok.out);
  CHECK(car.at("params").at("ell") == 1228);
  CHECK(car.at("params").at("p") == 3);
  CHECK(car.at("truth") == "yes");
  CHECK(car.at("witness").size() == 3);
}

TEST_CASE("bench writes a csv and cross-checks against the oracle") {
  RunResult empty = run_cli("bench --suite none");
  CHECK(empty.code == 0);
  CHECK(empty.out == "instance,algo,value,nodes_expanded,time_ms\n");

  RunResult paths = run_cli("bench --suite paths:4..8");
  CHECK(paths.code == 0);
  int rows = -1;  // discount the header
  for (char c : paths.out)
    if (c == '\n') ++rows;
  CHECK(rows == 5 * 4);

  RunResult rand = run_cli("bench --suite random:count=6,n=10,p=0.3,seed=11 --algos oracle,vc");
  CHECK(rand.code == 0);
}

TEST_CASE("error paths map to the documented exit codes") {
  fs::path bad = work_dir() / "bad.gr";
  std::ofstream(bad) << "p graph 2 1\ne 1 5\n";
  CHECK(run_cli("solve " + bad.string()).code == 2);
  CHECK(run_cli("solve " + (work_dir() / "missing.gr").string()).code == 2);

  std::string p8 = graph_file("p8.gr", vt::path(8));
  CHECK(run_cli("solve " + p8 + " --algo bogus").code == 2);
  CHECK(run_cli("solve " + p8 + " --problem coc").code == 2);      // missing --ell
  CHECK(run_cli("solve " + p8 + " --algo natural").code == 2);     // missing --k
  CHECK(run_cli("solve " + p8 + " --unknown-flag 3").code == 2);   // parser error
  CHECK(run_cli("gen --kind random --n 10").code == 2);            // missing --out

  std::string big = graph_file("big.gr", Graph(25));
  CHECK(run_cli("solve " + big + " --algo oracle").code == 3);
}
