#pragma once

// Finite simplicial sets: standard cells, horns, boundaries, levelwise
// limits and colimits, components, and mapping spaces.

#include "segalkit/cellular.hpp"

namespace segalkit {

using FinSSet = CellSet<1>;
using SSet = CellSetPtr<1>;
using SSetMap = CellMap<1>;
using Simplex = Cell<1>;

/// Delta[n].
SSet standard(int n);
/// The boundary of Delta[n] (n >= 1; boundary(0) is empty).
SSet boundary(int n);
/// Lambda^k[n]: all faces of Delta[n] except the k-th.
SSet horn(int n, int k);
/// The inclusion of a subobject of Delta[n] (boundary, horn) into Delta[n].
SSetMap standard_inclusion(const SSet& sub, int n);

/// All n-simplices, in canonical order.
const std::vector<Simplex>& levels(const FinSSet& x, int n);
Simplex apply(const FinSSet& x, const OrdinalMap& tau, const Simplex& s);

/// Map Delta[n] -> Delta[m] induced by tau.
SSetMap standard_map(int n, int m, const OrdinalMap& tau);
/// The simplex of Delta[m] given by a monotone map [k] -> [m].
Simplex standard_simplex(const FinSSet& delta_m, int m, const OrdinalMap& tau);

struct Components {
  /// Vertex generators in canonical order.
  std::vector<std::uint32_t> vertices;
  /// Class index per vertex (classes numbered by first occurrence).
  std::vector<int> component;
  /// Smallest vertex of each class.
  std::vector<std::uint32_t> representative;

  std::size_t count() const { return representative.size(); }
  int of(std::uint32_t vertex) const;
};

Components pi0(const FinSSet& x);
/// The induced map of component sets.
std::vector<int> pi0_map(const SSetMap& f);

/// Map(Y, X)_n = Hom(Y x Delta[n], X).
std::vector<SSetMap> map_space_level(const SSet& y, const SSet& x, int n);
/// Maps Y x Delta[n] -> X commuting with py : Y -> Z and px : X -> Z.
std::vector<SSetMap> map_space_over(const SSetMap& py, const SSetMap& px, int n);

/// Whether f, g : X -> Y over Z (via px, py) are connected by a zigzag of
/// homotopies X x Delta[1] -> Y over Z.
bool homotopic_over(const SSetMap& px, const SSetMap& py, const SSetMap& f, const SSetMap& g);

/// Generator-level isomorphism test.
bool isomorphic(const SSet& x, const SSet& y);

}  // namespace segalkit
