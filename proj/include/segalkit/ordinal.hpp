#pragma once

// Arrows of the simplex category: monotone maps [n] -> [m] between finite
// ordinals, plus the named generators and the endofunctors used to reindex
// simplicial objects (opposite, twisted arrow).

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segalkit {

/// Thrown when an index or dimension argument is outside its allowed range.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weakly increasing map [dom] -> [cod]. Values are stored explicitly.
class OrdinalMap {
 public:
  static constexpr int kMaxLength = 32;

  OrdinalMap() = default;
  OrdinalMap(int cod, std::span<const int> values);
  OrdinalMap(int cod, std::initializer_list<int> values);

  static OrdinalMap identity(int n);

  int dom() const { return static_cast<int>(size_) - 1; }
  int cod() const { return cod_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::vector<int> values() const;

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const OrdinalMap& a, const OrdinalMap& b) {
    return a.cod_ == b.cod_ && a.size_ == b.size_ && a.values_ == b.values_;
  }
  /// Lexicographic order on (dom, cod, values).
  friend bool operator<(const OrdinalMap& a, const OrdinalMap& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxLength> values_{};
  std::uint8_t size_ = 0;
  std::uint8_t cod_ = 0;
};

/// g o f; requires f.cod() == g.dom().
OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f);

/// d^i : [n-1] -> [n], the injection missing i.
OrdinalMap face(int i, int n);
/// s^i : [n+1] -> [n], hitting i twice.
OrdinalMap degeneracy(int i, int n);
/// delta^{k_0..k_m} : [m] -> [n] with value k_j at j.
OrdinalMap delta_tuple(std::span<const int> ks, int n);
OrdinalMap delta_tuple(std::initializer_list<int> ks, int n);
/// e^i : [m] -> [n], k -> k + i.
OrdinalMap shift(int i, int m, int n);
/// d^{i,j} : [n-2] -> [n], the injection missing i < j.
OrdinalMap face2(int i, int j, int n);

/// The involution tau -> iota(tau), iota(tau)(n - i) = m - tau(i).
OrdinalMap opposite(const OrdinalMap& tau);
/// The functor mu with mu([n]) = [2n+1]: mirrored copy of tau on the first
/// half, shifted copy on the second half.
OrdinalMap twist(const OrdinalMap& tau);
/// tau' : [n+1] -> [m+1], tau'(0) = 0, tau'(i+1) = tau(i) + 1.
OrdinalMap cone_shift(const OrdinalMap& tau);

struct EpiMono {
  OrdinalMap surjection;
  OrdinalMap injection;
};
/// The unique factorisation tau = injection o surjection.
EpiMono epi_mono_factor(const OrdinalMap& tau);

/// All monotone maps [n] -> [m], lexicographic in their value sequences.
std::vector<OrdinalMap> enumerate_maps(int n, int m);
/// All surjections [n] -> [k], lexicographic.
std::vector<OrdinalMap> enumerate_surjections(int n, int k);
/// All injections [k] -> [n], lexicographic.
std::vector<OrdinalMap> enumerate_injections(int k, int n);

/// Binomial coefficient for small arguments (0 when k is out of range).
std::uint64_t binomial(int n, int k);

/// Face-then-degeneracy word of a map, e.g. "d1 s0"; identity gives "id".
std::string normal_word(const OrdinalMap& tau);

/// An arrow [n', m'] -> [n, m] of the product category, one map per axis.
template <std::size_t K>
using MultiOrdinal = std::array<OrdinalMap, K>;
using BiOrdinalMap = MultiOrdinal<2>;

/// A functor from the simplex category to itself, applied to one axis of a
/// simplicial object.
struct DeltaFunctor {
  std::string name;
  std::function<int(int)> on_objects;
  std::function<OrdinalMap(const OrdinalMap&)> on_arrows;
  /// Upper bound on the levels that can carry non-degenerate cells of the
  /// reindexed object, given the top dimension of the input. Empty when
  /// unknown, in which case callers must truncate explicitly.
  std::function<int(int)> nondegenerate_bound;

  static DeltaFunctor identity();
  static DeltaFunctor opposite();
  static DeltaFunctor twist();
};

/// Checks identity and composition preservation on all maps with dom, cod
/// at most `size`. Returns false on the first violation.
bool is_functorial(const DeltaFunctor& phi, int size);

}  // namespace segalkit

template <>
struct std::hash<segalkit::OrdinalMap> {
  std::size_t operator()(const segalkit::OrdinalMap& m) const noexcept { return m.hash(); }
};
