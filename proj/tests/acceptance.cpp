// Runs every acceptance criterion at its runtime limit and prints one
// PASS/FAIL line per criterion. Exit status is non-zero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "segalkit/suite.hpp"

#ifndef SEGALKIT_CLI
#error "SEGALKIT_CLI must name the command-line binary"
#endif

using namespace segalkit;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20261019;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void line(int id, bool ok, const std::string& name, double seconds, double limit, const std::string& note) {
  if (limit > 0)
    std::printf("criterion %2d %s  %-30s %8.2f s (limit %g s)%s\n", id, ok ? "PASS" : "FAIL", name.c_str(), seconds, limit,
                note.c_str());
  else
    std::printf("criterion %2d %s  %-30s %8.2f s%s\n", id, ok ? "PASS" : "FAIL", name.c_str(), seconds, note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "segalkit_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  // The in-process criteria run on the corpus as read back from disk.
  write_corpus(default_corpus(kSeed), work / "corpus");
  auto corpus = load_corpus(work / "corpus");
  std::printf("corpus: %zu entries (%zu categories, %zu functors, %zu bisimplicial sets, %zu chains, %zu maps)\n",
              corpus.size(), corpus.categories.size(), corpus.functors.size(), corpus.bisets.size(), corpus.chains.size(),
              corpus.maps.size());

  int failed = 0;
  for (int id = 1; id <= kSuiteCriteria; ++id) {
    auto r = run_criterion(id, corpus);
    bool ok = r.passed && r.within_limit();
    std::string note;
    if (!r.passed) note = "  " + r.detail.dump();
    else if (!r.within_limit()) note = "  over the time limit";
    line(id, ok, r.name, r.seconds, r.limit_seconds, note);
    if (!ok) ++failed;
  }

  // Determinism: two suite runs of the command line with the same seed.
  auto start = std::chrono::steady_clock::now();
  const std::string cli = SEGALKIT_CLI;
  const fs::path dir = work / "suite_corpus";
  auto suite = [&](const fs::path& out) {
    return run("\"" + cli + "\" suite --corpus \"" + dir.string() + "\" --seed " + std::to_string(kSeed) + " --out \"" +
               out.string() + "\"");
  };
  int first = suite(work / "suite_a.json");
  int second = suite(work / "suite_b.json");
  std::string a = slurp(work / "suite_a.json"), b = slurp(work / "suite_b.json");
  bool same = !a.empty() && a == b;
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream note;
  note << "  exit codes " << first << "/" << second << ", " << a.size() << " bytes" << (same ? ", identical" : ", differ");
  line(12, same, "determinism", seconds, 0, note.str());
  if (!same) ++failed;

  std::printf("%d of %d criteria passed\n", kSuiteCriteria + 1 - failed, kSuiteCriteria + 1);
  return failed == 0 ? 0 : 1;
}
