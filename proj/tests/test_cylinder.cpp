#include "doctest.h"
#include "segalkit/cylinder.hpp"

using namespace segalkit;

namespace {

ChainOverB identity_chain(const SSet& k, int m) {
  ChainOverB c;
  c.base = disc(standard(0));
  auto obj = disc(k);
  for (int j = 0; j <= m; ++j) {
    c.objects.push_back(obj);
    c.to_base.push_back(to_point<2>(obj));
  }
  c.to_base.assign(c.to_base.size(), BiMap(obj, c.base, to_point<2>(obj).assignment()));
  for (int j = 0; j < m; ++j) c.maps.push_back(BiMap::identity(obj));
  return c;
}

std::size_t shuffle_count(int n) { return static_cast<std::size_t>(n) + 1; }

}  // namespace

TEST_CASE("cylinder of short chains") {
  auto c0 = identity_chain(standard(1), 0);
  auto cyl0 = cyl_disc(c0);
  CHECK(cyl0.object == c0.objects[0]);
  CHECK(check_cylinder(c0, cyl0).ok());

  auto c1 = identity_chain(standard(0), 1);
  auto cyl1 = cyl_disc(c1);
  CHECK(find_isomorphism<2>(cyl1.object, F(1)).has_value());
  CHECK(check_cylinder(c1, cyl1).ok());

  // K x F[m] for an identity chain.
  auto c2 = identity_chain(standard(1), 2);
  auto cyl2 = cyl_disc(c2);
  Product<2> expected(disc(standard(1)), F(2));
  CHECK(find_isomorphism<2>(cyl2.object, expected.object()).has_value());
  CHECK(check_cylinder(c2, cyl2).ok());
  CHECK(check_cylinder(c2, cyl2).iota0_mono);
}

TEST_CASE("cylinder of a collapse") {
  // Two points collapsing to one: Cyl is two edges meeting at the end.
  ChainOverB c;
  c.base = disc(standard(0));
  c.objects = {disc(boundary(1)), disc(standard(0))};
  c.to_base = {BiMap(c.objects[0], c.base, to_point<2>(c.objects[0]).assignment()),
               BiMap(c.objects[1], c.base, to_point<2>(c.objects[1]).assignment())};
  c.maps = {BiMap(c.objects[0], c.objects[1], to_point<2>(c.objects[0]).assignment())};
  c.validate();
  auto cyl = cyl_disc(c);
  CHECK(cyl.object->cells({0, 0}).size() == 3);
  CHECK(cyl.object->generators_of_degree({1, 0}).size() == 2);
  auto rep = check_cylinder(c, cyl);
  CHECK(rep.ok());
  CHECK_FALSE(rep.iota0_mono);
  CHECK(fiber_formula_check(c, cyl).ok());
}

TEST_CASE("a later collapse breaks injectivity of iota_0") {
  // f_1 is the identity, f_2 collapses two points: cells of K^(0) x F[2]
  // over tau with tau(0) = 2 meet.
  ChainOverB c;
  c.base = disc(standard(0));
  auto two = disc(boundary(1));
  auto one = disc(standard(0));
  c.objects = {two, two, one};
  for (auto& o : c.objects) c.to_base.push_back(BiMap(o, c.base, to_point<2>(o).assignment()));
  c.maps = {BiMap::identity(two), BiMap(two, one, to_point<2>(two).assignment())};
  c.validate();
  auto cyl = cyl_disc(c);
  auto rep = check_cylinder(c, cyl);
  CHECK(c.maps[0].is_injective_on_generators());
  CHECK_FALSE(rep.iota0_mono);
  CHECK(rep.iota0_mono_iff_composite_mono);
  CHECK(rep.ok());
  CHECK(fiber_formula_check(c, cyl).ok());
}

TEST_CASE("chain validation") {
  ChainOverB c;
  c.base = disc(standard(1));
  auto k = disc(standard(0));
  c.objects = {k, k};
  auto ends = c.base->generators_of_degree({0, 0});
  auto at0 = c.base->generator_cell(ends[0]);
  auto at1 = c.base->generator_cell(ends[1]);
  c.to_base = {BiMap(k, c.base, {at0}), BiMap(k, c.base, {at1})};
  c.maps = {BiMap::identity(k)};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(cyl_disc(c), std::invalid_argument);
}

TEST_CASE("fiber formula on random chains") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 24; ++trial) {
    const int m = trial % 3;
    auto chain = random_chain(rng, m);
    for (auto& k : chain.objects) CHECK(k->size() <= 6);
    auto cyl = cyl_disc(chain);
    auto rep = fiber_formula_check(chain, cyl, 3);
    CHECK(rep.ok());
    std::size_t taus = 0;
    for (int n = 0; n <= 3; ++n) taus += enumerate_maps(n, m).size();
    CHECK(rep.pieces == taus);
    CHECK(check_cylinder(chain, cyl).ok());
  }
}

TEST_CASE("gamma and epsilon") {
  auto [g, e] = gamma_eps_maps(0, 0);
  CHECK(g[0].values() == std::vector<int>{0, 0});
  CHECK(g[1].values() == std::vector<int>{0, 1});
  CHECK(e[0].values() == std::vector<int>{0});
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      auto [gi, ei] = gamma_eps_maps(n, i);
      auto d = face(i + 1, n + 1);
      CHECK(compose(gi[0], d) == ei[0]);
      CHECK(compose(gi[1], d) == ei[1]);
      if (i < n) {
        auto next = gamma_eps_maps(n, i + 1).first;
        CHECK(compose(next[0], d) == ei[0]);
        CHECK(compose(next[1], d) == ei[1]);
      }
      // Injective as a map into [n] x [1].
      for (int a = 0; a <= n + 1; ++a)
        for (int b = a + 1; b <= n + 1; ++b) CHECK((gi[0](a) != gi[0](b) || gi[1](a) != gi[1](b)));
    }
  CHECK_THROWS_AS(gamma_eps_maps(2, 3), std::out_of_range);
}

TEST_CASE("prism decompositions") {
  for (int n = 0; n <= 3; ++n) {
    auto d = prism_decomposition(n);
    CHECK(d.counts_match);
    CHECK(d.isomorphism);
    CHECK(d.product->object()->generators_of_degree({n + 1, 0}).size() == shuffle_count(n));
    CHECK(d.legs.size() == static_cast<std::size_t>(n) + 1);
  }
  auto d0 = prism_decomposition(0);
  CHECK(find_isomorphism<2>(d0.glued, F(1)).has_value());
  auto d1 = prism_decomposition(1);
  Product<2> square(F(1), F(1));
  CHECK(find_isomorphism<2>(d1.glued, square.object()).has_value());
}
