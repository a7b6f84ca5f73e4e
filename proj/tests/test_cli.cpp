#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(GKLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gklab_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("writes csv and summary") {
  const auto dir = scratch("ok");
  write(dir / "cfg.json", R"({"kind": "l1-unbounded", "n": [8], "m": [10]})");
  REQUIRE(run("l1-unbounded --config " + (dir / "cfg.json").string() + " --out " + (dir / "out").string()) == 0);
  const auto summary = nlohmann::json::parse(slurp(dir / "out" / "l1-unbounded.summary.json"));
  CHECK(summary["rows"] == 1);
  CHECK(summary["constants"]["blowup_ratio_max"].get<double>() > 10);
  CHECK(summary.contains("wall_time_seconds"));
  const std::string csv = slurp(dir / "out" / "l1-unbounded.csv");
  CHECK(csv.find("wall") == std::string::npos);
  CHECK(csv.rfind("config_hash,n,m,N,", 0) == 0);
}

TEST_CASE("flags override the file") {
  const auto dir = scratch("flags");
  write(dir / "cfg.json", R"({"n": [16, 32, 64, 128]})");
  REQUIRE(run("korovkin --config " + (dir / "cfg.json").string() + " --n 16,32 --grid 1025 --out " +
              dir.string()) == 0);
  const auto summary = nlohmann::json::parse(slurp(dir / "korovkin.summary.json"));
  CHECK(summary["rows"] == 2);
  CHECK(summary["config"]["grid"] == 1025);
}

TEST_CASE("reruns are byte-identical") {
  const auto dir = scratch("repro");
  const std::string args = "maximal --n 4,8,16 --functions step,root_singular --grid 2049 --out ";
  REQUIRE(run(args + (dir / "a").string()) == 0);
  REQUIRE(run(args + (dir / "b").string()) == 0);
  CHECK(slurp(dir / "a" / "maximal.csv") == slurp(dir / "b" / "maximal.csv"));
  CHECK_FALSE(slurp(dir / "a" / "maximal.csv").empty());
}

TEST_CASE("exit codes") {
  const auto dir = scratch("codes");
  write(dir / "bad.json", R"({"n": [8, 4]})");
  write(dir / "broken.json", "{ not json");
  CHECK(run("korovkin --config " + (dir / "bad.json").string()) == 2);
  CHECK(run("korovkin --config " + (dir / "broken.json").string()) == 2);
  CHECK(run("korovkin --config " + (dir / "missing.json").string()) == 2);
  CHECK(run("nonsense --out " + dir.string()) == 2);
  CHECK(run("korovkin --grid 12") == 2);
  CHECK(run("") == 2);
  CHECK(run("converge-lp --functions root_singular --p 3.999 --n 4 --grid 1025 --out " + dir.string()) == 3);
}

}  // TEST_SUITE
