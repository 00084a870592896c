#pragma once

// Integer homology of finite simplicial sets from normalized chains, and a
// necessary test for weak equivalence.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "segalkit/sset.hpp"

namespace segalkit {

using Integer = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Integer& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool is_zero() const;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Normalized chains: degree d is free on the non-degenerate d-simplices.
struct ChainComplex {
  /// Generators of each degree, up to the dimension.
  std::vector<std::vector<std::uint32_t>> generators;
  /// boundary[d] : C_d -> C_{d-1} (rows: degree d - 1); boundary[0] is 0 x rank(0).
  std::vector<IntMatrix> boundary;

  int top() const { return static_cast<int>(generators.size()) - 1; }
  std::size_t rank(int d) const;
  /// The boundary out of degree d, empty-shaped beyond the top degree.
  IntMatrix d(int degree) const;
  bool squares_to_zero() const;
};

ChainComplex chain_complex(const FinSSet& x);

struct SmithForm {
  /// Non-zero diagonal entries, positive, each dividing the next.
  std::vector<Integer> diagonal;

  std::size_t rank() const { return diagonal.size(); }
  /// Diagonal entries >= 2.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(IntMatrix m);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup homology(const ChainComplex& c, int d);
HomologyGroup homology(const FinSSet& x, int d);
/// H_0 .. H_top.
std::vector<HomologyGroup> homology_upto(const FinSSet& x, int top);

/// The chain map C(X) -> C(Y) in degree d.
IntMatrix chain_map(const SSetMap& f, const ChainComplex& cx, const ChainComplex& cy, int d);

enum class WeVerdict { RefutedWE, Consistent };
std::string to_string(WeVerdict v);

struct WeReport {
  WeVerdict verdict = WeVerdict::Consistent;
  int bound = 0;
  /// Why the map was refuted (empty when consistent).
  std::string reason;
};

/// Refutes f as a weak equivalence when pi_0(f) is not a bijection or the
/// mapping cone has homology in some degree <= bound + 1. Consistent is
/// not a certificate.
WeReport we_necessary(const SSetMap& f, int bound);

}  // namespace segalkit
