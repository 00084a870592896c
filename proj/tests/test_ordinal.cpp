#include "doctest.h"
#include "segalkit/ordinal.hpp"

using namespace segalkit;

namespace {

/// Every weakly increasing sequence of length n+1 in [0, m], by brute force.
std::vector<std::vector<int>> monotone(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<OrdinalMap> all_maps(int max) {
  std::vector<OrdinalMap> out;
  for (int n = 0; n <= max; ++n)
    for (int m = 0; m <= max; ++m)
      for (auto& v : monotone(n, m)) out.emplace_back(m, v);
  return out;
}

OrdinalMap opposite_oracle(const OrdinalMap& t) {
  const int n = t.dom(), m = t.cod();
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(n - i)] = m - t(i);
  return OrdinalMap(m, v);
}

OrdinalMap twist_oracle(const OrdinalMap& t) {
  const int n = t.dom(), m = t.cod();
  std::vector<int> v;
  for (int j = 0; j <= n; ++j) v.push_back(m - t(n - j));
  for (int j = 0; j <= n; ++j) v.push_back(m + 1 + t(j));
  return OrdinalMap(2 * m + 1, v);
}

}  // namespace

TEST_CASE("composition and named maps") {
  CHECK(compose(OrdinalMap::identity(2), face(1, 2)) == face(1, 2));
  CHECK(compose(degeneracy(0, 0), face(0, 1)) == OrdinalMap::identity(0));
  CHECK(compose(face(2, 2), face(0, 1)) == OrdinalMap(2, {1}));
  CHECK(delta_tuple({0, 0}, 1) == OrdinalMap(1, {0, 0}));
  CHECK(face(0, 1) == OrdinalMap(1, {1}));
  CHECK(shift(2, 1, 3) == OrdinalMap(3, {2, 3}));
  CHECK(face2(0, 2, 3) == OrdinalMap(3, {1, 3}));
  CHECK_THROWS_AS(face(3, 2), RangeError);
  CHECK_THROWS_AS(shift(3, 1, 3), RangeError);
  CHECK_THROWS_AS(compose(face(0, 1), face(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(OrdinalMap(2, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(OrdinalMap(1, {0, 2}), std::invalid_argument);
}

TEST_CASE("simplicial identities") {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (n >= 2) CHECK(compose(face(j, n), face(i, n - 1)) == compose(face(i, n), face(j - 1, n - 1)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= n; ++i) {
        // s^j : [n] -> [n-1], d^i : [n-1] -> [n].
        OrdinalMap sd = compose(degeneracy(j, n - 1), face(i, n));
        if (i < j) CHECK(sd == compose(face(i, n - 1), degeneracy(j - 1, n - 2 < 0 ? 0 : n - 2)));
        else if (i == j || i == j + 1) CHECK(sd == OrdinalMap::identity(n - 1));
        else CHECK(sd == compose(face(i - 1, n - 1), degeneracy(j, n - 2)));
      }
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(compose(degeneracy(i, n - 1), degeneracy(j + 1, n)) == compose(degeneracy(j, n - 1), degeneracy(i, n)));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_maps(1, 1).size() == 3);
  CHECK(enumerate_maps(2, 1).size() == 4);
  for (int m = 0; m <= 4; ++m) CHECK(enumerate_maps(0, m).size() == static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      auto maps = enumerate_maps(n, m);
      auto oracle = monotone(n, m);
      REQUIRE(maps.size() == oracle.size());
      CHECK(maps.size() == binomial(n + m + 1, n + 1));
      for (std::size_t k = 0; k < maps.size(); ++k) CHECK(maps[k].values() == oracle[k]);
      std::size_t surj = 0, inj = 0;
      for (auto& t : maps) {
        surj += t.is_surjective();
        inj += t.is_injective();
      }
      CHECK(enumerate_surjections(n, m).size() == surj);
      CHECK(enumerate_injections(n, m).size() == inj);
    }
}

TEST_CASE("opposite and twist") {
  CHECK(opposite(OrdinalMap::identity(3)) == OrdinalMap::identity(3));
  CHECK(opposite(face(0, 1)) == face(1, 1));
  CHECK(twist(OrdinalMap::identity(1)) == OrdinalMap::identity(3));
  CHECK(twist(face(0, 1)) == delta_tuple({0, 3}, 3));
  auto maps = all_maps(4);
  for (auto& t : maps) {
    CHECK(opposite(t) == opposite_oracle(t));
    CHECK(opposite(opposite(t)) == t);
    CHECK(twist(t) == twist_oracle(t));
    CHECK(twist(t).dom() == 2 * t.dom() + 1);
  }
  for (auto& g : all_maps(3))
    for (auto& f : all_maps(3)) {
      if (f.cod() != g.dom()) continue;
      CHECK(opposite(compose(g, f)) == compose(opposite(g), opposite(f)));
      CHECK(twist(compose(g, f)) == compose(twist(g), twist(f)));
      CHECK(cone_shift(compose(g, f)) == compose(cone_shift(g), cone_shift(f)));
    }
  CHECK(is_functorial(DeltaFunctor::opposite(), 3));
  CHECK(is_functorial(DeltaFunctor::twist(), 3));
}

TEST_CASE("epi-mono factorisation") {
  auto f = epi_mono_factor(OrdinalMap(2, {1, 1}));
  CHECK(f.surjection == degeneracy(0, 0));
  CHECK(f.injection == OrdinalMap(2, {1}));
  for (auto& t : all_maps(4)) {
    auto e = epi_mono_factor(t);
    CHECK(e.surjection.is_surjective());
    CHECK(e.injection.is_injective());
    CHECK(compose(e.injection, e.surjection) == t);
    // Uniqueness: the image of tau determines the injection.
    auto v = t.values();
    std::vector<int> image(v.begin(), std::unique(v.begin(), v.end()));
    CHECK(e.injection.values() == image);
  }
  CHECK(normal_word(OrdinalMap::identity(2)) == "id");
}
