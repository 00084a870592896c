#pragma once

// Lifting problems and the fibration classes defined by generating
// families. Bisimplicial fibration checks run two independent routes:
// lifting against the generating family, and the levelwise matching-map
// characterization. Disagreement raises InvariantViolation.

#include <optional>
#include <string>
#include <vector>

#include "segalkit/bisset.hpp"

namespace segalkit {

/// A commutative square p o a = b o i.
template <std::size_t K>
struct LiftingProblem {
  CellMap<K> i, p, a, b;
  LiftingProblem(CellMap<K> i_, CellMap<K> p_, CellMap<K> a_, CellMap<K> b_);
};

/// All diagonals c with c o i = a and p o c = b, in canonical order.
template <std::size_t K>
std::vector<CellMap<K>> lifts(const LiftingProblem<K>& problem);

struct RlpResult {
  bool holds = true;
  std::size_t squares = 0;
  /// The first unfillable square, when one exists.
  std::string certificate;
};

template <std::size_t K>
RlpResult has_rlp(const CellMap<K>& i, const CellMap<K>& p);

enum class Family { KanHorn, KanBoundary, Reedy, ReedyTrivial, Left };

std::string family_name(Family f);

/// A subobject A of the standard object of degree `top`.
template <std::size_t K>
struct FamilyMember {
  std::string name;
  Degree<K> top;
  CellSetPtr<K> sub;
};

/// Members of a generating family with total degree <= bound.
template <std::size_t K>
std::vector<FamilyMember<K>> family_members(Family family, int bound);

/// RLP of p against one member, by comparing every square with the image
/// of X_top. Squares are enumerated with a outer and b inner.
template <std::size_t K>
RlpResult has_rlp_member(const CellMap<K>& p, const FamilyMember<K>& member);

struct FamilyResult {
  bool holds = true;
  int bound = 0;
  std::size_t members = 0;
  std::size_t squares = 0;
  std::string certificate;
  /// Per member verdict, in member order (used for cross-checking routes).
  std::vector<std::pair<std::string, bool>> per_member;
};

template <std::size_t K>
FamilyResult has_rlp_family(const CellMap<K>& p, Family family, int bound);

struct Verdict {
  bool holds = true;
  int bound = 0;
  /// Inputs of total dimension <= bound - 1 make the bounded check complete.
  bool complete = false;
  /// Set when the family used is an extension of the published ones.
  bool extension = false;
  std::string certificate;

  std::string tier() const { return "bounded(" + std::to_string(bound) + ")"; }
};

Verdict check_kan_fibration(const SSetMap& p, int bound);
Verdict check_trivial_fibration(const SSetMap& p, int bound);
Verdict check_trivial_fibration(const BiMap& p, int bound);
Verdict check_reedy_fibration(const BiMap& p, int bound);
Verdict check_left_fibration(const BiMap& p, int bound);

/// The levelwise route on its own: per-(n, m, i) verdicts keyed like the
/// family members.
FamilyResult reedy_matching_route(const BiMap& p, int bound, bool trivial);
FamilyResult left_levelwise_route(const BiMap& p, int bound);

/// A retract of morphisms: f is a retract of g via (s0, s1) : f -> g and
/// (r0, r1) : g -> f with r o s = id.
template <std::size_t K>
struct RetractWitness {
  CellMap<K> s0, s1, r0, r1;
};

template <std::size_t K>
std::vector<RetractWitness<K>> retract_witnesses(const CellMap<K>& f, const CellMap<K>& g,
                                                 std::size_t limit = 0);
template <std::size_t K>
std::optional<RetractWitness<K>> is_retract(const CellMap<K>& f, const CellMap<K>& g);

/// The maps [n+1] -> [n] x [1] -> [n+1] exhibiting the initial vertex of
/// [n+1] as a retract of [n] x {0} in [n] x [1].
struct RetractDelta0 {
  int n = 0;
  /// alpha as its two coordinate maps [n+1] -> [n] and [n+1] -> [1].
  OrdinalMap alpha_first, alpha_second;
  /// beta(i, j) = (i + 1) j, tabulated as beta[i][j].
  std::vector<std::array<int, 2>> beta;
  bool beta_alpha_identity = false;
  bool alpha0_in_bottom = false;
  bool beta_bottom_zero = false;

  bool ok() const { return beta_alpha_identity && alpha0_in_bottom && beta_bottom_zero; }
};

RetractDelta0 retract_delta0(int n);

/// The closed form as maps of simplicial sets: f = initial vertex of
/// Delta[n+1], g = Delta[n] x {0} in Delta[n] x Delta[1].
struct RetractDelta0Maps {
  std::shared_ptr<Product<1>> prism;
  SSetMap f, g;
  RetractWitness<1> witness;
};

RetractDelta0Maps retract_delta0_maps(int n);

}  // namespace segalkit
