#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"
#include "segalkit/io.hpp"

namespace fs = std::filesystem;
using segalkit::Json;

namespace {

const fs::path& dir() {
  static const fs::path d = [] {
    auto p = fs::temp_directory_path() / "segalkit_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string file(const std::string& name) { return (dir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " \"" + std::string(SEGALKIT_CLI) + "\" " + args + " >\"" + file("stdout.txt") + "\" 2>\"" +
                    file("stderr.txt") + "\"";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json last_json() { return Json::parse(slurp(file("stdout.txt"))); }

}  // namespace

TEST_CASE("cli: homology of the boundary of a triangle") {
  REQUIRE(cli("make boundary 2 --out " + file("d2.json")) == 0);
  CHECK(cli("check homology --in " + file("d2.json")) == 0);
  auto j = last_json();
  CHECK(j["certificate"]["H0"] == "Z");
  CHECK(j["certificate"]["H1"] == "Z");
  CHECK(j["tier"] == "exact-discrete");
  CHECK(cli("check homology --in " + file("d2.json") + " --text") == 0);
  CHECK(slurp(file("stdout.txt")).find("homology") != std::string::npos);
}

TEST_CASE("cli: Segal and completeness on Z/2") {
  REQUIRE(cli("make disc-nerve z2 --out " + file("bz2.json")) == 0);
  CHECK(cli("check segal --in " + file("bz2.json") + " --bound 3") == 0);
  CHECK(last_json()["tier"] == "bounded(3)");
  CHECK(cli("check complete --in " + file("bz2.json")) == 1);
  auto j = last_json();
  CHECK(j["verdict"] == false);
  CHECK(j["certificate"]["heq"] == 2);
  CHECK(j["certificate"]["objects"] == 1);
}

TEST_CASE("cli: left fibration of a twisted projection") {
  REQUIRE(cli("make fincat path2 --out " + file("path2.json")) == 0);
  REQUIRE(cli("make twist-projection " + file("path2.json") + " 2 --out " + file("tw.json")) == 0);
  CHECK(cli("check left-fib --in " + file("tw.json") + " --bound 2") == 0);
  CHECK(last_json()["anchor"] == "fibration.left-family");
}

TEST_CASE("cli: usage and parse errors exit 2") {
  CHECK(cli("") == 2);
  CHECK(cli("check no-such-kind") == 2);
  CHECK(cli("check homology") == 2);
  {
    std::ofstream out(file("junk.json"));
    out << "[1, 2";
  }
  CHECK(cli("check homology --in " + file("junk.json")) == 2);
  CHECK(slurp(file("stderr.txt")).find("junk.json") != std::string::npos);
  CHECK(cli("check homology --in " + file("absent.json")) == 2);
  CHECK(cli("make standard minus-one") == 2);
}

TEST_CASE("cli: a corrupted corpus file exits 2 and is named") {
  auto corpus = dir() / "corpus";
  fs::create_directories(corpus);
  {
    std::ofstream out(corpus / "cat_bad.json");
    out << "{\"kind\": \"fincat\", \"objects\": 3}";
  }
  CHECK(cli("suite --corpus " + corpus.string()) == 2);
  CHECK(slurp(file("stderr.txt")).find("cat_bad.json") != std::string::npos);
}

TEST_CASE("cli: exhausting the cell budget exits 3") {
  REQUIRE(cli("make fincat z2 --out " + file("z2.json")) == 0);
  CHECK(cli("check segal --in " + file("z2.json") + " --bound 5", "SEGALKIT_MAX_CELLS=20") == 3);
  CHECK(slurp(file("stderr.txt")).find("resource") != std::string::npos);
}
