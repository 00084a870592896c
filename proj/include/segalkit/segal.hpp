#pragma once

// Finite categories, their nerves, Segal maps, the homotopy category and
// completeness for discrete bisimplicial sets.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "segalkit/bisset.hpp"

namespace segalkit {

/// A finite category with an explicit composition table.
struct FinCat {
  struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  /// Identity arrow of each object.
  std::vector<int> identity;
  /// compose[g][f] = g o f, or -1 when target(f) != source(g).
  std::vector<std::vector<int>> composition;

  std::size_t size() const { return arrows.size(); }
  int comp(int g, int f) const;
  /// Arrows x -> y in index order.
  std::vector<int> hom(int x, int y) const;
  bool is_identity(int f) const { return identity[static_cast<std::size_t>(arrows[static_cast<std::size_t>(f)].source)] == f; }
  /// Whether f has a two-sided inverse.
  bool is_invertible(int f) const;
  /// Throws std::invalid_argument on a malformed table or failed law.
  void validate() const;
  /// Longest chain of non-identity arrows, or nothing when chains are
  /// unbounded (a non-identity endomorphism or a cycle of objects).
  std::optional<int> chain_bound() const;
};

/// [n] as a category.
FinCat ordinal_category(int n);
/// The poset on n elements generated by the given strict relations.
FinCat poset(int n, const std::vector<std::pair<int, int>>& less);
/// The one-object groupoid Z/k.
FinCat cyclic_group(int k);
/// k objects, identities only.
FinCat discrete_category(int k);
/// Two parallel arrows 0 -> 1.
FinCat parallel_pair();
/// The groupoid with k objects, one arrow between any two, and vertex group Z/g.
FinCat connected_groupoid(int k, int g);
/// Closes a presentation by arrows and a partial composition table under
/// the category laws; the table must already be total on composable pairs.
FinCat make_category(std::vector<std::string> objects, std::vector<FinCat::Arrow> arrows,
                     std::vector<int> identity, std::vector<std::vector<int>> composition);

/// Isomorphism of categories: object and arrow bijections.
struct CatIso {
  std::vector<int> on_objects;
  std::vector<int> on_arrows;
};
std::optional<CatIso> find_cat_isomorphism(const FinCat& c, const FinCat& d);

/// Chains of n composable arrows (level 0: single objects), in
/// lexicographic order of arrow ids.
std::vector<LevelKey> chains(const FinCat& c, int n);
/// Objects c_0, ..., c_n visited by a chain of level n.
std::vector<int> chain_objects(const FinCat& c, int n, const LevelKey& chain);
/// The chain tau^* of a chain of level tau.cod().
LevelKey chain_act(const FinCat& c, const OrdinalMap& tau, const LevelKey& chain);
/// The composite arrow c_i -> c_j of a chain (i <= j).
int chain_composite(const FinCat& c, int n, const LevelKey& chain, int i, int j);

/// The nerve, truncated at `max_dim` when chains are unbounded.
struct Nerve {
  SSet object;
  /// Arrow chain (object id at level 0) of every generator.
  std::vector<LevelKey> chain;
  Normalized<1> normalized;

  Simplex simplex_of(int level, const LevelKey& chain_key) const;
};

Nerve nerve(const FinCat& c, std::optional<int> max_dim = std::nullopt);
BiSet disc_nerve(const FinCat& c, std::optional<int> max_dim = std::nullopt);

/// A functor given by its action on objects and arrows.
struct Functor {
  std::vector<int> on_objects;
  std::vector<int> on_arrows;
};

/// Throws std::invalid_argument unless f is a functor c -> d.
void validate_functor(const FinCat& c, const FinCat& d, const Functor& f);
/// N(f) : N(c) -> N(d) between nerves built from c and d.
SSetMap nerve_map(const Nerve& nc, const Nerve& nd, const FinCat& c, const FinCat& d, const Functor& f);

/// A simplicial set given level by level, cached; every new level is
/// checked against the functoriality of the action.
class VirtualSSet {
 public:
  using Elements = std::function<std::vector<LevelKey>(int)>;
  using Action = std::function<LevelKey(const OrdinalMap&, const LevelKey&)>;

  VirtualSSet(Elements elements, Action act);

  const std::vector<LevelKey>& level(int n) const;
  LevelKey act(const OrdinalMap& tau, const LevelKey& e) const;
  /// Levels materialized so far.
  int levels_cached() const;

 private:
  Elements elements_;
  Action act_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<LevelKey>> cache_;
};

/// Map(Y, X) as a virtual simplicial set, elements keyed by assignments.
VirtualSSet map_space(const SSet& y, const SSet& x);

/// phi_n : X_n -> X_1 x_{X_0} ... x_{X_0} X_1.
struct SegalMap {
  std::shared_ptr<Slice> row_n, row_1, row_0;
  std::vector<std::shared_ptr<Product<1>>> stages;
  SSetMap map;
};

SegalMap segal_map(const BiSet& x, int n);

/// For discrete X: every phi_n with 2 <= n <= bound is a bijection.
bool check_segal_discrete(const BiSet& x, int bound);

/// Vertex generators of X (cells of degree (0, 0)).
std::vector<BiCell> objects_of(const FinBiSet& x);
/// Edges of X_{1,0} from x to y (vertex generators).
std::vector<BiCell> mapping_set(const FinBiSet& x, std::uint32_t from, std::uint32_t to);
BiCell identity_elt(const FinBiSet& x, std::uint32_t object);

/// Ho X for a discrete Segal X, with arrows the cells of X_{1,0}.
struct HomotopyCategory {
  FinCat category;
  /// The cell of X_{1,0} represented by each arrow.
  std::vector<BiCell> edge;
  /// The vertex generator of each object.
  std::vector<std::uint32_t> vertex;
};

HomotopyCategory homotopy_category(const BiSet& x);

/// Edges of X_{1,0} invertible in Ho X.
std::vector<BiCell> heq_subset(const BiSet& x);

struct Completeness {
  bool complete = false;
  std::size_t heq = 0;
  std::size_t objects = 0;
};
Completeness is_complete_discrete(const BiSet& x);

bool fully_faithful_discrete(const BiMap& f);

struct PrimeComponents {
  /// Edges in row components meeting the degenerate edges.
  std::vector<BiCell> x1;
  /// 3-cells whose 02 and 13 edges lie in x1.
  std::vector<BiCell> x3;
  /// The 12 edges of x3.
  std::vector<BiCell> d12;
  std::vector<BiCell> heq;
  bool matches = false;
};
PrimeComponents prime_components(const BiSet& x);

}  // namespace segalkit
