#pragma once

// Finite K-fold simplicial sets in Eilenberg-Zilber normal form.
//
// An object is a list of generators (the non-degenerate cells), each with a
// multi-degree and, along every axis, its codimension-one faces written as
// normal cells (a surjection per axis applied to an earlier generator). Every
// cell of the object is then uniquely a pair (surjections, generator).
// K = 1 gives simplicial sets, K = 2 bisimplicial sets (simplicial spaces).

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "segalkit/ordinal.hpp"

namespace segalkit {

/// An enumeration exceeded the configured cell budget (SEGALKIT_MAX_CELLS).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, never an input
/// property.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Cell budget for any single enumeration. Reads SEGALKIT_MAX_CELLS once,
/// defaulting to 5000.
std::size_t max_cells();
/// Overrides the budget (tests and the suite use this to raise it).
void set_max_cells(std::size_t n);
void check_budget(std::size_t n, const char* what);

template <std::size_t K>
using Degree = std::array<int, K>;

template <std::size_t K>
int total(const Degree<K>& d) {
  int t = 0;
  for (int x : d) t += x;
  return t;
}

template <std::size_t K>
bool degree_leq(const Degree<K>& a, const Degree<K>& b) {
  for (std::size_t i = 0; i < K; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Canonical order on degrees: total degree first, then lexicographic.
template <std::size_t K>
bool degree_less(const Degree<K>& a, const Degree<K>& b) {
  int ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

template <std::size_t K>
std::string degree_string(const Degree<K>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < K; ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

template <std::size_t K>
MultiOrdinal<K> identity_multi(const Degree<K>& d) {
  MultiOrdinal<K> r;
  for (std::size_t a = 0; a < K; ++a) r[a] = OrdinalMap::identity(d[a]);
  return r;
}

/// A normal cell: surjections per axis (cell degree -> generator degree)
/// applied to a generator.
template <std::size_t K>
struct Cell {
  MultiOrdinal<K> epis;
  std::uint32_t gen = 0;

  Degree<K> degree() const {
    Degree<K> d;
    for (std::size_t a = 0; a < K; ++a) d[a] = epis[a].dom();
    return d;
  }
  bool is_generator() const {
    for (auto& e : epis)
      if (!e.is_identity()) return false;
    return true;
  }
  friend bool operator==(const Cell& x, const Cell& y) { return x.gen == y.gen && x.epis == y.epis; }
  friend bool operator<(const Cell& x, const Cell& y) {
    if (x.gen != y.gen) return x.gen < y.gen;
    for (std::size_t a = 0; a < K; ++a) {
      if (x.epis[a] < y.epis[a]) return true;
      if (y.epis[a] < x.epis[a]) return false;
    }
    return false;
  }
  std::size_t hash() const {
    std::size_t h = gen * 0x9e3779b97f4a7c15ULL;
    for (auto& e : epis) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <std::size_t K>
struct CellHash {
  std::size_t operator()(const Cell<K>& c) const noexcept { return c.hash(); }
};

template <std::size_t K>
struct CellVectorHash {
  std::size_t operator()(const std::vector<Cell<K>>& v) const noexcept {
    std::size_t h = v.size();
    for (auto& c : v) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <std::size_t K>
struct Generator {
  Degree<K> degree{};
  std::string label;
  /// faces[a][i] is the i-th face along axis a; empty when degree[a] == 0.
  std::array<std::vector<Cell<K>>, K> faces;
};

template <std::size_t K>
class CellSet {
 public:
  CellSet();
  /// Sorts generators canonically by (degree, input order), remaps face
  /// references and validates the simplicial identities.
  explicit CellSet(std::vector<Generator<K>> gens, bool validate = true);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator<K>& generator(std::uint32_t g) const { return gens_[g]; }
  std::span<const Generator<K>> generators() const { return gens_; }
  std::vector<std::uint32_t> generators_of_degree(const Degree<K>& d) const;
  std::optional<std::uint32_t> find_label(const std::string& label) const;

  /// Componentwise maximum of generator degrees (all -1 when empty).
  Degree<K> dimension() const;
  /// Maximum total degree (-1 when empty).
  int total_dimension() const;
  bool is_discrete_in_last_axis() const;

  Cell<K> generator_cell(std::uint32_t g) const;
  /// All cells of the given degree: generators in order, surjections
  /// lexicographic (axis 0 outermost).
  const std::vector<Cell<K>>& cells(const Degree<K>& d) const;
  std::optional<std::size_t> cell_index(const Cell<K>& c) const;

  /// tau^* c, renormalised. tau[a] must have codomain c.degree()[a].
  Cell<K> apply(const MultiOrdinal<K>& tau, const Cell<K>& c) const;
  /// d_i along one axis.
  Cell<K> face(const Cell<K>& c, std::size_t axis, int i) const;
  /// s_i along one axis.
  Cell<K> degen(const Cell<K>& c, std::size_t axis, int i) const;
  /// The cell c restricted along a single vertex per axis.
  Cell<K> vertex(const Cell<K>& c, const std::array<int, K>& at) const;

  /// Full face tuple of a cell (axis-major), used as a search key.
  std::vector<Cell<K>> face_key(const Cell<K>& c) const;
  /// Cells of degree d grouped by their face tuple; values index cells(d).
  const std::unordered_map<std::vector<Cell<K>>, std::vector<std::uint32_t>, CellVectorHash<K>>&
  face_index(const Degree<K>& d) const;

  std::string cell_label(const Cell<K>& c) const;
  /// Throws std::invalid_argument when the stored faces violate the
  /// simplicial identities or degree constraints.
  void validate() const;

  /// Structural equality: same generator degrees and faces in the same
  /// order. Labels are ignored.
  bool same_structure(const CellSet& other) const;

 private:
  struct Cache;
  Cell<K> restrict_to(std::uint32_t g, const MultiOrdinal<K>& inj) const;

  std::vector<Generator<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <std::size_t K>
using CellSetPtr = std::shared_ptr<const CellSet<K>>;

template <std::size_t K>
CellSetPtr<K> make_cellset(std::vector<Generator<K>> gens, bool validate = true) {
  return std::make_shared<const CellSet<K>>(std::move(gens), validate);
}

/// A map of K-simplicial sets, given by the image of each source generator.
template <std::size_t K>
class CellMap {
 public:
  CellMap() = default;
  CellMap(CellSetPtr<K> source, CellSetPtr<K> target, std::vector<Cell<K>> assignment,
          bool validate = true);

  static CellMap identity(CellSetPtr<K> x);

  const CellSet<K>& source() const { return *source_; }
  const CellSet<K>& target() const { return *target_; }
  const CellSetPtr<K>& source_ptr() const { return source_; }
  const CellSetPtr<K>& target_ptr() const { return target_; }
  const std::vector<Cell<K>>& assignment() const { return assignment_; }

  Cell<K> image(const Cell<K>& c) const;
  /// First failing (generator, axis, index) commutation, if any.
  std::optional<std::string> commutation_failure() const;
  bool is_identity() const;
  bool is_injective_on_generators() const;

  friend bool operator==(const CellMap& a, const CellMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.assignment_ == b.assignment_;
  }

 private:
  CellSetPtr<K> source_;
  CellSetPtr<K> target_;
  std::vector<Cell<K>> assignment_;
};

/// g o f.
template <std::size_t K>
CellMap<K> compose(const CellMap<K>& g, const CellMap<K>& f);

/// Constraints for the backtracking hom search.
template <std::size_t K>
struct HomConstraints {
  /// Per source generator, a prescribed image (or empty).
  std::vector<std::optional<Cell<K>>> fixed;
  /// When set, only maps c with over(c(x)) = over_base(x) are produced.
  const CellMap<K>* over = nullptr;       // target -> base
  const CellMap<K>* over_base = nullptr;  // source -> base
  /// Only generator-to-generator assignments of equal degree, injective.
  bool generators_bijective = false;
};

/// Visits every map source -> target satisfying the constraints, in a
/// deterministic order; stops when visit returns false. Returns the number
/// of maps visited.
template <std::size_t K>
std::size_t for_each_map(const CellSet<K>& source, const CellSet<K>& target,
                         const HomConstraints<K>& constraints,
                         const std::function<bool(const std::vector<Cell<K>>&)>& visit);

/// All maps source -> target in canonical order (subject to the budget).
template <std::size_t K>
std::vector<CellMap<K>> hom_enum(const CellSetPtr<K>& source, const CellSetPtr<K>& target,
                                 const HomConstraints<K>& constraints = {});

template <std::size_t K>
std::size_t hom_count(const CellSet<K>& source, const CellSet<K>& target,
                      const HomConstraints<K>& constraints = {});

/// An isomorphism source -> target (optionally commuting with maps to a
/// common base), or nothing.
template <std::size_t K>
std::optional<CellMap<K>> find_isomorphism(const CellSetPtr<K>& x, const CellSetPtr<K>& y,
                                           const CellMap<K>* x_over = nullptr,
                                           const CellMap<K>* y_over = nullptr);

/// True when the map is bijective on cells in every degree, i.e. an
/// isomorphism.
template <std::size_t K>
bool is_isomorphism(const CellMap<K>& f);

/// Levelwise bijectivity of a map on all degrees up to `up_to` per axis.
template <std::size_t K>
bool is_levelwise_bijective(const CellMap<K>& f, const Degree<K>& up_to);

// ---------------------------------------------------------------------------
// Limits

/// X x Y (or a pullback, when a filter on pairs is given), with projections
/// and pairing. Generators are the jointly non-degenerate pairs.
template <std::size_t K>
class Product {
 public:
  using PairFilter = std::function<bool(const Cell<K>&, const Cell<K>&)>;

  Product(CellSetPtr<K> x, CellSetPtr<K> y, std::optional<int> max_total = std::nullopt,
          PairFilter filter = {});

  const CellSetPtr<K>& object() const { return object_; }
  const CellMap<K>& first() const { return first_; }
  const CellMap<K>& second() const { return second_; }

  /// The cell (a, b); a and b must have equal degree (and pass the filter).
  Cell<K> pair(const Cell<K>& a, const Cell<K>& b) const;
  /// <f, g> : Z -> X x Y.
  CellMap<K> pairing(const CellMap<K>& f, const CellMap<K>& g) const;

 private:
  CellSetPtr<K> x_, y_, object_;
  CellMap<K> first_, second_;
  std::unordered_map<std::vector<Cell<K>>, std::uint32_t, CellVectorHash<K>> index_;
};

/// f x g : X x Y -> X' x Y'.
template <std::size_t K>
CellMap<K> product_map(const Product<K>& from, const Product<K>& to, const CellMap<K>& f,
                       const CellMap<K>& g);

/// Pullback of f : X -> Z and g : Y -> Z.
template <std::size_t K>
Product<K> pullback(const CellMap<K>& f, const CellMap<K>& g,
                    std::optional<int> max_total = std::nullopt);

template <std::size_t K>
struct Subobject {
  CellSetPtr<K> object;
  CellMap<K> inclusion;
  /// For each ambient generator, its index in the subobject (if kept).
  std::vector<std::optional<std::uint32_t>> index;
};

/// The subobject spanned by the kept generators; they must be closed under
/// faces.
template <std::size_t K>
Subobject<K> subobject(const CellSetPtr<K>& x, const std::vector<bool>& keep);

/// The smallest subobject containing the given generators.
template <std::size_t K>
Subobject<K> generated_subobject(const CellSetPtr<K>& x, const std::vector<bool>& seeds);

/// Subobject generated by generators of total degree <= n.
template <std::size_t K>
Subobject<K> skeleton(const CellSetPtr<K>& x, int n);

/// Fiber of f : Y -> X over a vertex (generator of degree zero) of X.
template <std::size_t K>
Product<K> fiber(const CellMap<K>& f, std::uint32_t vertex);

/// The terminal object.
template <std::size_t K>
CellSetPtr<K> point();

template <std::size_t K>
CellMap<K> to_point(const CellSetPtr<K>& x);

/// Constant map picking a vertex (generator of degree zero).
template <std::size_t K>
CellMap<K> vertex_map(const CellSetPtr<K>& x, std::uint32_t vertex);

// ---------------------------------------------------------------------------
// Colimits

template <std::size_t K>
struct Coproduct {
  CellSetPtr<K> object;
  std::vector<CellMap<K>> inclusions;
};

template <std::size_t K>
Coproduct<K> coproduct(const std::vector<CellSetPtr<K>>& parts);

template <std::size_t K>
class Pushout {
 public:
  /// Pushout of f : A -> X and g : A -> Y, computed as the levelwise
  /// quotient of X + Y, then renormalised.
  Pushout(const CellMap<K>& f, const CellMap<K>& g);

  const CellSetPtr<K>& object() const { return object_; }
  const CellMap<K>& left() const { return left_; }
  const CellMap<K>& right() const { return right_; }
  /// The map out of the pushout induced by u : X -> W and v : Y -> W.
  CellMap<K> induced(const CellMap<K>& u, const CellMap<K>& v) const;

 private:
  CellSetPtr<K> object_;
  CellMap<K> left_, right_;
  /// Per pushout generator: (side, source generator) of one preimage.
  std::vector<std::pair<int, std::uint32_t>> origin_;
};

// ---------------------------------------------------------------------------
// Levelwise presentations

using LevelKey = std::vector<std::int64_t>;

struct LevelKeyHash {
  std::size_t operator()(const LevelKey& k) const noexcept {
    std::size_t h = k.size();
    for (auto x : k) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// A K-simplicial set presented level by level: the element set of each
/// degree and the action of arrows. Used for nerves, reindexing, rows and
/// the undercategory constructions.
template <std::size_t K>
struct LevelOracle {
  std::function<std::vector<LevelKey>(const Degree<K>&)> elements;
  std::function<LevelKey(const MultiOrdinal<K>&, const LevelKey&)> act;
  std::function<std::string(const Degree<K>&, const LevelKey&)> label;
};

template <std::size_t K>
struct Normalized {
  CellSetPtr<K> object;
  /// Normal cell of every enumerated element, per degree.
  std::map<Degree<K>, std::unordered_map<LevelKey, Cell<K>, LevelKeyHash>> cell_of;
  /// The element represented by each generator.
  std::vector<LevelKey> generator_key;

  Cell<K> lookup(const Degree<K>& d, const LevelKey& key) const;
};

/// Detects degenerate elements (e = s_i d_i e), writes every element in
/// normal form and returns the finite object whose generators are the
/// non-degenerate elements of degree <= max_per_axis with total degree
/// <= max_total.
template <std::size_t K>
Normalized<K> normalize(const LevelOracle<K>& oracle, const Degree<K>& max_per_axis,
                        int max_total);

// ---------------------------------------------------------------------------
// Standard objects and connectivity

/// Delta[n] (K = 1) or box[n, m] (K = 2): generators are tuples of
/// injections, labelled by their vertex lists.
template <std::size_t K>
CellSetPtr<K> standard_cells(const Degree<K>& top);

/// The cell of the standard object represented by a tuple of ordinal maps
/// into its top degree.
template <std::size_t K>
Cell<K> standard_cell(const CellSet<K>& standard, const Degree<K>& top, const MultiOrdinal<K>& tau);

/// The ordinal maps represented by a cell of a standard object.
template <std::size_t K>
MultiOrdinal<K> standard_arrow(const CellSet<K>& standard, const Degree<K>& top,
                               const Cell<K>& c);

/// The map std(n) -> std(m) induced by tau.
template <std::size_t K>
CellMap<K> standard_map(const CellSetPtr<K>& from, const Degree<K>& from_top,
                        const CellSetPtr<K>& to, const Degree<K>& to_top,
                        const MultiOrdinal<K>& tau);

/// The map from the standard object of c's degree classifying c.
template <std::size_t K>
CellMap<K> characteristic_map(const CellSetPtr<K>& standard, const CellSetPtr<K>& x,
                              const Cell<K>& c);

/// Connected components of the vertex set: class index per vertex
/// generator, classes numbered by smallest member.
template <std::size_t K>
std::vector<int> vertex_components(const CellSet<K>& x);

template <std::size_t K>
std::vector<std::uint32_t> vertices(const CellSet<K>& x);

}  // namespace segalkit
