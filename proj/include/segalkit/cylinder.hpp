#pragma once

// The discrete iterated cylinder of a chain over B and the prism
// decompositions of F[n] x F[1].

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "segalkit/bisset.hpp"

namespace segalkit {

/// K^(0) -> ... -> K^(m) over B.
struct ChainOverB {
  BiSet base;
  std::vector<BiSet> objects;
  std::vector<BiMap> to_base;
  /// maps[j] : K^(j) -> K^(j+1).
  std::vector<BiMap> maps;

  int length() const { return static_cast<int>(objects.size()) - 1; }
  /// The chain K^(1) -> ... -> K^(m).
  ChainOverB tail() const;
  /// Throws std::invalid_argument unless every triangle over B commutes.
  void validate() const;
};

ChainOverB make_chain(BiSet base, std::vector<BiSet> objects, std::vector<BiMap> to_base, std::vector<BiMap> maps);

struct Cylinder {
  BiSet object;
  /// B x F[m].
  std::shared_ptr<Product<2>> base;
  BiMap projection;
  /// K^(j) x F[m - j].
  std::vector<std::shared_ptr<Product<2>>> iota_sources;
  /// iota_j : K^(j) x e^j F[m - j] -> Cyl.
  std::vector<BiMap> iota;
  int length = 0;
};

Cylinder cyl_disc(const ChainOverB& f);

/// The restriction of the cylinder to the vertex i of F[m], with its map to B.
struct Endpoint {
  std::shared_ptr<Product<2>> fiber;
  BiMap to_base;
};
Endpoint endpoint(const Cylinder& c, int i);

struct CylinderReport {
  bool endpoints = false;
  bool iota_over_base = false;
  /// iota_0 is injective on the cells of K^(0) x F[m] off K^(0) x e^1 F[m - 1].
  bool iota0_injective_off_face = false;
  bool iota0_mono = false;
  /// iota_0 is a monomorphism exactly when f_m o ... o f_1 is (always, for m = 0).
  bool iota0_mono_iff_composite_mono = false;
  bool iota_endpoints = false;

  bool ok() const {
    return endpoints && iota_over_base && iota0_injective_off_face && iota0_mono_iff_composite_mono && iota_endpoints;
  }
};
/// Endpoint property, iota_j over B x F[m], injectivity of iota_0, and
/// iota_j at the j-th endpoint an isomorphism onto the fiber.
CylinderReport check_cylinder(const ChainOverB& f, const Cylinder& c);

struct FiberFormulaReport {
  std::size_t pieces = 0;
  /// "n=<n> tau=[...]" for every piece not isomorphic to K^(tau(0))_n over B_n.
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};
FiberFormulaReport fiber_formula_check(const ChainOverB& f, const Cylinder& c, int max_n = 3);

/// gamma^i : [n + 1] -> [n] x [1] and eps^i : [n] -> [n] x [1].
std::pair<BiOrdinalMap, BiOrdinalMap> gamma_eps_maps(int n, int i);

struct PrismDecomposition {
  int n = 0;
  std::vector<BiOrdinalMap> gamma, eps;
  /// F[n] x F[1].
  std::shared_ptr<Product<2>> product;
  /// F[n + 1] glued n times along F[n].
  BiSet glued;
  /// The n + 1 legs F[n + 1] -> glued.
  std::vector<BiMap> legs;
  BiMap comparison;
  bool counts_match = false;
  bool isomorphism = false;
};
PrismDecomposition prism_decomposition(int n);

/// A random chain of length m over a random base, from a pool of discrete
/// objects with at most six cells.
ChainOverB random_chain(std::mt19937_64& rng, int m);

}  // namespace segalkit
