#pragma once

// The verification corpus and the acceptance criteria run over it.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segalkit/report.hpp"

namespace segalkit {

template <typename T>
using Named = std::vector<std::pair<std::string, T>>;

struct Corpus {
  Named<FinCat> categories;
  /// Set functors (with their categories) for the evaluation checks.
  Named<FunctorFile> functors;
  Named<BiSet> bisets;
  Named<ChainOverB> chains;
  /// Small bisimplicial maps for the fibration route comparison.
  Named<BiMap> maps;

  std::size_t size() const;
};

/// Deterministic in the seed.
Corpus default_corpus(std::uint64_t seed);

/// One file per entry, named "<kind>_<name>.json".
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);
/// Loads every .json file in name order; ParseError messages name the file.
Corpus load_corpus(const std::filesystem::path& dir);
/// Loads the directory, first writing the default corpus when it is empty
/// or missing.
Corpus ensure_corpus(const std::filesystem::path& dir, std::uint64_t seed);

/// Nerve truncation used throughout: none for categories with bounded
/// chains, `dim` otherwise.
std::optional<int> nerve_truncation(const FinCat& c, int dim);
bool is_poset(const FinCat& c);
bool is_groupoid(const FinCat& c);

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string anchor;
  std::string tier;
  bool passed = false;
  Json detail;
  double seconds = 0;
  double limit_seconds = 0;

  bool within_limit() const { return seconds < limit_seconds; }
};

constexpr int kSuiteCriteria = 11;

/// Runs criterion 1..11 on the corpus and times it.
CriterionResult run_criterion(int id, const Corpus& corpus);
std::vector<CriterionResult> run_suite(const Corpus& corpus);
/// The machine-readable summary: no timings, so it is reproducible.
Json suite_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace segalkit
