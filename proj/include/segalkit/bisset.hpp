#pragma once

// Finite bisimplicial sets (simplicial spaces). The first axis is the
// outer index: X_n is the simplicial set m -> X_{n,m}.

#include <map>
#include <memory>

#include "segalkit/sset.hpp"

namespace segalkit {

using FinBiSet = CellSet<2>;
using BiSet = CellSetPtr<2>;
using BiMap = CellMap<2>;
using BiCell = Cell<2>;

/// The standard bisimplex box[n, m], representing Hom(-, [n, m]).
BiSet box(int n, int m);
/// The boundary of box[n, m]: every generator except the top one.
BiSet boundary_box(int n, int m);
/// F[n] = box[n, 0].
BiSet F(int n);
BiSet dF(int n);
/// F^i[n]: the horn Lambda^i[n] placed along the first axis.
BiSet Fhorn(int n, int i);
/// Inclusion of a subobject of box[n, m] (matched by label).
BiMap box_inclusion(const BiSet& sub, int n, int m);
/// Map box[n, m] -> box[n', m'] induced by a pair of ordinal maps.
BiMap box_map(int n, int m, int n2, int m2, const BiOrdinalMap& tau);
BiCell box_cell(const FinBiSet& b, int n, int m, const BiOrdinalMap& tau);

/// X placed along the first axis, discrete in the second.
BiSet disc(const SSet& x);
BiMap disc(const SSetMap& f, const BiSet& source, const BiSet& target);
/// X placed along the second axis.
BiSet constant(const SSet& x);

/// X_n (first index frozen) or the column (second index frozen) as a
/// simplicial set, together with the translation of cells.
class Slice {
 public:
  Slice(BiSet x, std::size_t frozen_axis, int index, std::optional<int> max_level = std::nullopt);

  const SSet& object() const { return norm_.object; }
  const BiSet& source() const { return x_; }
  int index() const { return index_; }
  std::size_t frozen_axis() const { return axis_; }
  /// Degree of the bisimplicial cells at level k of the slice.
  Degree<2> degree_at(int k) const;
  Simplex simplex_of(const BiCell& c) const;
  BiCell cell_of(const Simplex& s) const;

 private:
  BiSet x_;
  std::size_t axis_;
  int index_;
  Normalized<1> norm_;
};

Slice row(const BiSet& x, int n, std::optional<int> max_level = std::nullopt);
Slice column(const BiSet& x, int m, std::optional<int> max_level = std::nullopt);
/// The map of slices induced by tau : [to.index] -> [from.index] on the frozen axis.
SSetMap slice_map(const Slice& from, const Slice& to, const OrdinalMap& tau);

/// Phi^* X along the first axis: (Phi^*X)_{n,m} = X_{Phi(n),m}.
class Reindexed {
 public:
  Reindexed(DeltaFunctor phi, BiSet x, std::optional<int> max_first = std::nullopt);

  const BiSet& object() const { return norm_.object; }
  const BiSet& source() const { return x_; }
  const DeltaFunctor& functor() const { return phi_; }
  /// Upper bound on first-axis levels that were computed.
  int first_bound() const { return bound_; }
  /// The cell of Phi^*X at (n, m) represented by c in X_{Phi(n), m}.
  BiCell cell_of(int n, const BiCell& c) const;
  /// The cell of X represented by a cell of Phi^*X.
  BiCell source_cell(const BiCell& c) const;

 private:
  DeltaFunctor phi_;
  BiSet x_;
  int bound_;
  Normalized<2> norm_;
};

/// Phi^* f : Phi^* X -> Phi^* Y for reindexings along the same functor.
BiMap reindex_map(const Reindexed& from, const Reindexed& to, const BiMap& f);

Reindexed opposite(const BiSet& x, std::optional<int> max_first = std::nullopt);
Reindexed twisted(const BiSet& x, std::optional<int> max_first = std::nullopt);

/// pi_X : M(X) -> X^op x X.
struct TwistProjection {
  std::shared_ptr<Reindexed> twisted;
  std::shared_ptr<Reindexed> opposite;
  std::shared_ptr<Product<2>> product;
  BiMap map;
};

TwistProjection twist_projection(const BiSet& x, std::optional<int> max_first = std::nullopt);

Subobject<2> bis_skeleton(const BiSet& x, int n);
/// sk_{n-1} X glued to one box[m, k] per non-degenerate cell of total
/// degree n along its boundary, compared with sk_n X.
struct SkeletonPushout {
  Subobject<2> previous;
  Subobject<2> current;
  /// The attached cells, in generator order.
  std::vector<std::uint32_t> cells;
  BiSet glued;
  BiMap comparison;
  bool isomorphism = false;
};
SkeletonPushout skeleton_pushout(const BiSet& x, int n);

/// Non-degenerate cells per bidegree.
std::map<Degree<2>, std::vector<std::uint32_t>> nondegenerate(const FinBiSet& x);

struct TauPiece {
  OrdinalMap tau;
  Subobject<1> piece;
  /// piece -> row(B, n).
  SSetMap to_base;
};

struct TauDecomposition {
  std::shared_ptr<Slice> row;
  std::shared_ptr<Slice> base_row;
  std::vector<TauPiece> pieces;
};

/// Splits row(X, n) by the F[m]-component of p : X -> B x F[m]; one piece
/// per tau : [n] -> [m], in lexicographic order.
TauDecomposition tau_decompose(const BiMap& p, const Product<2>& target, int m, int n);

}  // namespace segalkit
