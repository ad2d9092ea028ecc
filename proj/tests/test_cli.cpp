#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace segal;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string cli() {
  const char* p = std::getenv("SEGAL_CLI");
  return p ? p : "segal";
}

std::string fixture(const std::string& f) { return data_dir() + "/catalog/fixtures/" + f; }

Run run(const std::string& args) {
  Run r;
  std::string cmd = cli() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify-theorem sd2Segal at max size 3") {
  auto r = run("verify-theorem sd2Segal --instance vect_f1 --max-size 3 --levels 3");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["theorem"] == "hermitian-rel2segal");
  CHECK_FALSE(j["reports"].empty());
}

TEST_CASE("circle fixture: 2-Segal holds, the 1-Segal witness is reported") {
  auto r = run("check --condition 2segal --unital --input " + fixture("circle.json"));
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j.contains("related"));
  auto& one = j["related"]["1segal"];
  CHECK(one["pass"] == false);
  CHECK(one["first_failure"].get<std::string>().find("not surjective") != std::string::npos);

  auto s = run("check --condition 1segal --input " + fixture("circle.json"));
  CHECK(s.code == 1);
  auto k = json::parse(s.out);
  CHECK(k["pass"] == false);
  bool witnessed = false;
  for (auto& inst : k["instances"])
    if (inst["verdict"] == "fail") witnessed = witnessed || inst.contains("witness");
  CHECK(witnessed);
}

TEST_CASE("malformed category is an input error") {
  CHECK(run("build nerve --input " + fixture("malformed_category.json")).code == 2);
  CHECK(run("build nerve --input /nonexistent/file.json").code == 2);
  CHECK(run("check --condition 7segal --input " + fixture("circle.json")).code == 2);
  CHECK(run("verify-theorem noSuchTheorem").code == 2);
  CHECK(run("hall --bogus").code == 2);
}

TEST_CASE("failure reports carry a replayable witness") {
  auto r = run("check --condition 2segal --input " + fixture("empty_top.json"));
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK_FALSE(j["first_failure"].get<std::string>().empty());
  bool found = false;
  for (auto& inst : j["instances"])
    if (inst["verdict"] == "fail") {
      CHECK(inst["params"].contains("n"));
      CHECK(inst["params"].contains("i"));
      CHECK(inst.contains("witness"));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("non-free action is rejected with the bijectivity error") {
  auto r = run("pentagon --group Z2 --action " + fixture("trivial_action.json"));
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["apentagon"]["bijective"] == false);
  CHECK(j["apentagon"]["error"].get<std::string>().find("not a bijection") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  auto dir = fs::temp_directory_path() / "segal_cli_test";
  fs::create_directories(dir);
  auto a = dir / "a.json", b = dir / "b.json";
  for (auto& p : {a, b}) CHECK(run("hall --instance vect_fq --q 2 --max-size 2 --out " + p.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  auto c = dir / "c.csv";
  CHECK(run("hall --instance vect_f1 --max-size 3 --format csv --out " + c.string()).code == 0);
  auto csv = slurp(c);
  CHECK(csv.rfind("U,V,W,count\n", 0) == 0);
  CHECK(csv.find("[1],[2],[3],3") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("build and check compose through files") {
  auto dir = fs::temp_directory_path() / "segal_cli_build";
  fs::create_directories(dir);
  auto x = dir / "nerve.json";
  CHECK(run("build nerve --name square --levels 4 --out " + x.string()).code == 0);
  CHECK(run("check --condition 1segal --input " + x.string()).code == 0);
  CHECK(run("check --condition 2segal --unital --input " + x.string()).code == 0);
  auto p = dir / "path.json";
  CHECK(run("build path-space --input " + x.string() + " --side right --out " + p.string()).code == 0);
  CHECK(run("check --condition rel2segal --unital --input " + p.string()).code == 0);
  fs::remove_all(dir);
}

TEST_CASE("pentagon and interpolate subcommands") {
  auto r = run("pentagon --group S3 --torsor --levels 4");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["nerve_sizes"] == json::array({1, 1, 6, 36, 216}));
  auto dir = fs::temp_directory_path() / "segal_cli_interp";
  fs::create_directories(dir);
  auto s = dir / "samples.json";
  std::ofstream(s) << R"({"samples": [[2, 3], [3, 4], [5, 6]], "max_degree": 1})";
  auto i = run("interpolate --input " + s.string());
  CHECK(i.code == 0);
  auto k = json::parse(i.out);
  CHECK(k["at_one"] == "2");
  fs::remove_all(dir);
}
