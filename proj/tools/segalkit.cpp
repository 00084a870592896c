#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "segalkit/checks.hpp"
#include "segalkit/suite.hpp"

using namespace segalkit;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ParseError(out + ": cannot write");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial and bisimplicial sets: fibration, Segal, Yoneda and cylinder checks"};
  app.require_subcommand(1);

  std::string kind, out;
  std::vector<std::string> inputs;
  int bound = 3;
  bool text = false, json = false;
  auto* check = app.add_subcommand("check", "Run one check; exit 0 when it holds, 1 when it fails");
  check->add_option("kind", kind, "Check kind")->required()->check(CLI::IsMember(check_kinds()));
  check->add_option("--in", inputs, "Input files");
  check->add_option("--bound", bound, "Bound D for bounded checks")->check(CLI::PositiveNumber);
  check->add_option("--out", out, "Write the report here instead of stdout");
  auto* json_flag = check->add_flag("--json", json, "JSON report (default)");
  check->add_flag("--text", text, "Text report")->excludes(json_flag);

  std::string factory, make_out;
  std::vector<std::string> params;
  auto* make = app.add_subcommand("make", "Build an object file from a factory");
  make->add_option("factory", factory, "Factory name")->required()->check(CLI::IsMember(factory_names()));
  make->add_option("params", params, "Factory parameters");
  make->add_option("--out", make_out, "Output file (default stdout)");

  std::string corpus_dir = "corpus", suite_out;
  std::uint64_t seed = 20261019;
  bool suite_text = false;
  auto* suite = app.add_subcommand("suite", "Run the acceptance suite over a corpus directory");
  suite->add_option("--corpus", corpus_dir, "Corpus directory (generated when empty)");
  suite->add_option("--seed", seed, "Seed for corpus generation");
  suite->add_option("--out", suite_out, "Write the JSON summary here instead of stdout");
  suite->add_flag("--text", suite_text, "Per-criterion lines with timings on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) {
      std::vector<Json> files;
      for (auto& path : inputs) files.push_back(read_json_file(path));
      auto start = std::chrono::steady_clock::now();
      Report r;
      try {
        r = run_check(kind, files, bound);
      } catch (const ParseError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(text ? r.to_text() : canonical(r.to_json()), out);
      return r.verdict ? kPass : kFail;
    }
    if (*make) {
      Json j = make_object(factory, params);
      emit(canonical(j), make_out);
      return kPass;
    }
    if (*suite) {
      auto corpus = ensure_corpus(corpus_dir, seed);
      auto results = run_suite(corpus);
      if (suite_text) {
        for (auto& r : results) {
          std::fprintf(stderr, "criterion %2d %s %s (%.2f s)\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
        }
      }
      Json summary = suite_json(results, seed);
      emit(canonical(summary), suite_out);
      return summary["passed"].get<bool>() ? kPass : kFail;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
