#pragma once

// Undercategories, the auxiliary object of the Yoneda comparison, the
// category of elements, and the discrete Yoneda checks on nerves.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segalkit/segal.hpp"

namespace segalkit {

/// A bisimplicial set presented by a level oracle over a base X, with its
/// projection to X.
struct OverBase {
  BiSet base;
  std::uint32_t vertex = 0;
  int first_bound = 0;
  int second_bound = 0;
  Normalized<2> normalized;
  BiSet object;
  BiMap projection;

  /// Key of every cell of an enumerated degree, by cell index.
  std::map<Degree<2>, std::vector<LevelKey>> keys_by_cell;

  const LevelKey& key_of(const BiCell& c) const;
};

/// x\X: level (n, m) holds the maps Delta[n] x Delta[1] -> X_{., m} that are
/// constant at x on Delta[n] x {0}; keys list the X cell (by index in its
/// degree) of every generator of Delta[n] x Delta[1].
struct Under : OverBase {
  std::vector<std::shared_ptr<Product<1>>> prisms;
  /// id_x as a cell of degree (0, 0).
  BiCell id_x;

  /// The X cell of degree (k, m) assigned to a cell of the prism P_n.
  BiCell value(int n, int m, const LevelKey& key, const Simplex& prism_cell) const;
  /// The key at level k of the composite with a poset map [k] x [1] -> [n] x [1].
  LevelKey precompose(int n, int m, const LevelKey& key, int k,
                      const std::function<std::array<int, 2>(int, int)>& phi) const;
};

Under under(const BiSet& x, std::uint32_t vertex, std::optional<int> first_bound = std::nullopt,
            std::optional<int> second_bound = std::nullopt);

/// The retraction r : x\X -> id_x\(x\X) induced by m(i, j) = ij, with its
/// verification on levels up to (max_n, max_m).
struct RetractionReport {
  bool id_to_id = false;
  bool section = false;
  bool m_kills_a = false;
  std::size_t cells_checked = 0;

  bool ok() const { return id_to_id && section && m_kills_a; }
};
RetractionReport under_retraction(const BiSet& x, std::uint32_t vertex, int max_n = 2, int max_m = 2);

/// (x\~X)_n = {x} x_{X_0} X_{n+1}, reindexed along tau'; keys are X cell
/// indices in degree (n + 1, m).
OverBase tilde_under(const BiSet& x, std::uint32_t vertex, std::optional<int> first_bound = std::nullopt,
                     std::optional<int> second_bound = std::nullopt);

/// {x} x_{X^op} M(X): cells w of X_{2n+1} whose e^0 part is constant at x,
/// reindexed along mu, projected along e^{n+1}.
OverBase twisted_fiber(const BiSet& x, std::uint32_t vertex, int first_bound,
                       std::optional<int> second_bound = std::nullopt);

/// psi' : x\~X -> x\X via (i, j) -> (i + j) j.
BiMap psi_prime(const OverBase& tilde, const Under& u);
/// psi'' : x\~X -> {x} x_{X^op} M(X) via r(i) = 0, r(n + 1 + i) = i + 1.
BiMap psi_dprime(const OverBase& tilde, const OverBase& fiber);

struct PsiReport {
  bool prime_over_x = false;
  bool dprime_over_x = false;
  bool level0_identity = false;
  bool dprime_injective = false;
  bool section = false;

  bool ok() const { return prime_over_x && dprime_over_x && level0_identity && dprime_injective && section; }
};
/// Verifies psi' and psi'' over X, their level-0 identities, and
/// pi_n o psi''_n = Id with pi_n the restriction along e^n.
PsiReport check_psi(const BiSet& x, std::uint32_t vertex, int first_bound);

/// A functor C -> finite sets, or C^op -> finite sets when contravariant.
struct SetFunctor {
  std::vector<int> sizes;
  /// Per arrow, the function on elements (covariant: F(source) -> F(target)).
  std::vector<std::vector<int>> on_arrows;
  bool contravariant = false;
};

void validate_set_functor(const FinCat& c, const SetFunctor& f);
/// Hom(x, -).
SetFunctor representable(const FinCat& c, int x);

/// The category of elements: chains of C with an element of F at the chain
/// start (at the end when contravariant), over disc_nerve(C).
struct ElementsFibration {
  FinCat category;
  SetFunctor functor;
  Nerve base_nerve;
  BiSet base;
  SSet total_sset;
  BiSet total;
  BiMap projection;
  /// Chain plus element of every generator of total_sset.
  std::vector<LevelKey> keys;

  /// The vertex generator of the base for object x.
  std::uint32_t base_vertex(int x) const;
  /// Vertices of the total space over x.
  std::vector<std::uint32_t> fiber(int x) const;
};

ElementsFibration elements(const FinCat& c, const SetFunctor& f, std::optional<int> max_dim = std::nullopt);

struct EvaluationReport {
  std::size_t maps = 0;
  std::size_t fiber = 0;
  bool injective = false;
  bool surjective = false;

  bool bijective() const { return injective && surjective; }
};
/// Maps x\X -> E over X (x\X truncated at `under_bound`), evaluated at id_x.
EvaluationReport evaluation_check(const ElementsFibration& e, int x, int under_bound = 3);

struct YonedaReport {
  /// (x, y, |fiber of pi_X over (x, y)|, |Hom(x, y)|).
  std::vector<std::array<std::size_t, 4>> fibers;
  bool counts_match = false;
  bool natural = false;
  std::size_t squares = 0;

  bool ok() const { return counts_match && natural; }
};
/// Fibers of pi_X : M(X) -> X^op x X over objects and the action of the
/// 1-cells of M(X), compared with Hom and composition in C.
YonedaReport fully_faithful_yoneda_check(const FinCat& c, std::optional<int> max_dim = std::nullopt);

}  // namespace segalkit
