#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "ksc/io.hpp"

using nlohmann::json;

namespace {

const std::string kCli = KSC_CLI_PATH;

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ksc_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const TempDir& tmp, const std::string& args) {
  const std::string out_file = tmp.file("stdout.txt");
  const std::string cmd = kCli + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("graph-info reports spectral summary") {
  TempDir tmp;
  write(tmp.file("k3.json"),
        R"({"n":3,"edges":[{"i":0,"j":1,"w":1},{"i":1,"j":2,"w":1},{"i":0,"j":2,"w":1}]})");
  const RunResult r = run(tmp, "graph-info " + tmp.file("k3.json"));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 3);
  CHECK(j["cycle_count"] == 1);
  CHECK(std::abs(j["lambda2"].get<double>() - 3.0) < 1e-9);
  CHECK(j["d_max"].get<double>() == 2.0);

  write(tmp.file("p3.csv"), "i,j,w\n0,1,1\n1,2,1\n");
  const RunResult rp = run(tmp, "graph-info " + tmp.file("p3.csv"));
  REQUIRE(rp.exit_code == 0);
  const json jp = json::parse(rp.out);
  CHECK(jp["cycle_count"] == 0);
  CHECK(std::abs(jp["lambda2"].get<double>() - 1.0) < 1e-9);
}

TEST_CASE("exit codes: parse failure and disconnected graph") {
  TempDir tmp;
  write(tmp.file("broken.json"), "{ not json");
  CHECK(run(tmp, "graph-info " + tmp.file("broken.json")).exit_code == 2);
  write(tmp.file("disc.json"),
        R"({"n":4,"edges":[{"i":0,"j":1,"w":1},{"i":2,"j":3,"w":1}]})");
  CHECK(run(tmp, "graph-info " + tmp.file("disc.json")).exit_code == 3);
  CHECK(run(tmp, "graph-info " + tmp.file("absent.json")).exit_code == 2);
}

TEST_CASE("certify subcommand") {
  TempDir tmp;
  write(tmp.file("k3.json"),
        R"({"n":3,"edges":[{"i":0,"j":1,"w":1},{"i":1,"j":2,"w":1},{"i":0,"j":2,"w":1}]})");

  const RunResult lim = run(tmp, "certify " + tmp.file("k3.json") + " --phi 0");
  REQUIRE(lim.exit_code == 0);
  const json jl = json::parse(lim.out);
  CHECK(jl["limit_case"] == true);
  CHECK(std::abs(jl["gamma_bar"].get<double>() - 1.5707963267948966) < 1e-12);

  const RunResult mid =
      run(tmp, "certify " + tmp.file("k3.json") + " --phi 0.78539816339744831");
  REQUIRE(mid.exit_code == 0);
  const json jm = json::parse(mid.out);
  CHECK(std::abs(jm["gamma_bar"].get<double>() - std::atan(1.5)) < 1e-9);
  CHECK(jm["verdict"] == "Semicontracting");

  const RunResult bad = run(
      tmp, "certify " + tmp.file("k3.json") + " --phi 0.5 --gamma 1.5");
  REQUIRE(bad.exit_code == 0);
  CHECK(json::parse(bad.out)["verdict"] == "NotCertified");

  CHECK(run(tmp, "certify " + tmp.file("k3.json") + " --phi 3.0").exit_code ==
        4);

  // --degrees converts at the boundary.
  const RunResult deg =
      run(tmp, "certify " + tmp.file("k3.json") + " --phi 45 --degrees");
  REQUIRE(deg.exit_code == 0);
  CHECK(std::abs(json::parse(deg.out)["gamma_bar"].get<double>() -
                 std::atan(1.5)) < 1e-9);
}

TEST_CASE("scan subcommand emits the grid") {
  TempDir tmp;
  write(tmp.file("k3.json"),
        R"({"n":3,"edges":[{"i":0,"j":1,"w":1},{"i":1,"j":2,"w":1},{"i":0,"j":2,"w":1}]})");
  const std::string out = tmp.file("scan.csv");
  const RunResult r = run(tmp, "scan " + tmp.file("k3.json") +
                                   " --phi 0.01 --res 21 --out " + out);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# ksc " + std::string(ksc::kVersion), 0) == 0);
  std::getline(in, line);
  CHECK(line == "s,t,mu,u_0,cohesive");
  int rows = 0;
  bool mu_positive_somewhere = false, cohesive_negative = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream ss(line);
    std::string f;
    std::vector<std::string> fields;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    REQUIRE(fields.size() == 5);
    const double mu = std::stod(fields[2]);
    if (fields[4] == "1" && mu >= 0.0) cohesive_negative = false;
    if (fields[4] == "0" && mu > 0.0) mu_positive_somewhere = true;
  }
  CHECK(rows == 21 * 21);
  CHECK(cohesive_negative);
  CHECK(mu_positive_somewhere);
}

TEST_CASE("bounds subcommand") {
  TempDir tmp;
  const std::string out = tmp.file("bounds.csv");
  const RunResult r = run(
      tmp, "bounds --ratios 0.5,1,2 --phi-min 0.01 --phi-max 1.57 --steps 100 "
           "--out " + out);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::string line;
  int rows = -2;  // comment + header
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 300);
}

TEST_CASE("simulate subcommand and winding tracking") {
  TempDir tmp;
  std::string ring;
  {
    std::ostringstream ss;
    ss << "i,j,w\n";
    for (int i = 0; i + 1 < 5; ++i) ss << i << "," << i + 1 << ",1\n";
    ss << "0,4,1\n";
    ring = ss.str();
  }
  write(tmp.file("ring5.csv"), ring);

  const std::string out = tmp.file("traj.csv");
  const RunResult r = run(tmp, "simulate " + tmp.file("ring5.csv") +
                                   " --phi 0 --x0 splay:1 --dt 0.01 --t 1 "
                                   "--track-winding --out " + out);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);  // comment
  std::getline(in, line);
  CHECK(line == "t,x_0,x_1,x_2,x_3,x_4,u_0");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "1");
  }
  CHECK(rows == 101);

  // Uniform-frequency consensus drift.
  const std::string out2 = tmp.file("drift.csv");
  const RunResult r2 = run(tmp, "simulate " + tmp.file("ring5.csv") +
                                    " --phi 0.2 --omega 1,1,1,1,1 --x0 zero "
                                    "--dt 0.1 --t 1 --out " + out2);
  REQUIRE(r2.exit_code == 0);
  std::ifstream in2(out2);
  std::getline(in2, line);
  std::getline(in2, line);
  std::vector<std::string> last;
  while (std::getline(in2, line))
    if (!line.empty()) {
      last.clear();
      std::istringstream ss(line);
      std::string f;
      while (std::getline(ss, f, ',')) last.push_back(f);
    }
  REQUIRE(last.size() == 6);
  for (int i = 1; i <= 5; ++i)
    CHECK(std::abs(std::stod(last[i]) - 1.0) < 1e-9);  // x(1) = t * 1

  // Non-finite initial state exits 5.
  CHECK(run(tmp, "simulate " + tmp.file("ring5.csv") +
                     " --phi 0 --x0 nan,0,0,0,0 --dt 0.1 --t 1 --out " +
                     tmp.file("bad.csv")).exit_code == 5);
}

TEST_CASE("sync subcommand finds one class per cell and is deterministic") {
  TempDir tmp;
  std::string ring;
  {
    std::ostringstream ss;
    ss << "i,j,w\n";
    for (int i = 0; i + 1 < 5; ++i) ss << i << "," << i + 1 << ",1\n";
    ss << "0,4,1\n";
    ring = ss.str();
  }
  write(tmp.file("ring5.csv"), ring);

  const std::string base = "sync " + tmp.file("ring5.csv") +
                           " --phi 0 --omega zero --u 1 --gamma 1.4 "
                           "--starts 20 --seed 7";
  const RunResult a = run(tmp, base);
  REQUIRE(a.exit_code == 0);
  const json ja = json::parse(a.out);
  CHECK(ja["classes"] == 1);
  CHECK(ja["alarm"] == false);
  CHECK(ja["converged"].get<int>() >= 1);

  const RunResult b = run(tmp, base + " --jobs 3");
  CHECK(b.out == a.out);  // byte-identical given the seed

  const RunResult empty = run(tmp, "sync " + tmp.file("ring5.csv") +
                                       " --phi 0 --u 0 --gamma 1.0 --starts 0 "
                                       "--seed 1");
  REQUIRE(empty.exit_code == 0);
  CHECK(json::parse(empty.out)["sampled"] == 0);

  CHECK(run(tmp, "sync " + tmp.file("ring5.csv") +
                     " --phi 0.5 --u 0 --gamma 1.9 --starts 5 --seed 1")
            .exit_code == 4);  // gamma >= gamma_bar
}
