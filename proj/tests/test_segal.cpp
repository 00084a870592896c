#include "doctest.h"
#include "segalkit/segal.hpp"
#include "segalkit/sset.hpp"

using namespace segalkit;

namespace {

std::size_t composable(const FinCat& c, int n) {
  // Chains of n composable arrows, counted by dynamic programming over
  // endpoints.
  if (n == 0) return c.objects.size();
  std::vector<std::size_t> ending(c.objects.size(), 0);
  for (auto& a : c.arrows) ++ending[static_cast<std::size_t>(a.target)];
  for (int k = 1; k < n; ++k) {
    std::vector<std::size_t> next(c.objects.size(), 0);
    for (auto& a : c.arrows) next[static_cast<std::size_t>(a.target)] += ending[static_cast<std::size_t>(a.source)];
    ending = next;
  }
  std::size_t total = 0;
  for (auto e : ending) total += e;
  return total;
}

std::vector<FinCat> small_categories() {
  return {ordinal_category(0), ordinal_category(1), discrete_category(2), parallel_pair(), cyclic_group(2),
          cyclic_group(3),     poset(3, {{0, 1}, {0, 2}}), poset(3, {{0, 2}, {1, 2}})};
}

}  // namespace

TEST_CASE("nerves") {
  CHECK(isomorphic(nerve(ordinal_category(1)).object, standard(1)));
  CHECK(isomorphic(nerve(ordinal_category(2)).object, standard(2)));
  auto z2 = nerve(cyclic_group(2), 3).object;
  CHECK(z2->generators_of_degree({0}).size() == 1);
  CHECK(z2->generators_of_degree({1}).size() == 1);
  for (auto& c : small_categories()) {
    auto n = nerve(c, 3);
    for (int k = 0; k <= 3; ++k) CHECK(n.object->cells({k}).size() == composable(c, k));
  }
  CHECK_THROWS_AS(nerve(cyclic_group(2)), std::invalid_argument);
  CHECK(ordinal_category(3).chain_bound() == 3);
  CHECK_FALSE(connected_groupoid(2, 1).chain_bound().has_value());
}

TEST_CASE("category validation") {
  auto c = cyclic_group(2);
  c.composition[0][1] = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_NOTHROW(connected_groupoid(2, 2).validate());
  CHECK(connected_groupoid(2, 2).size() == 8);
}

TEST_CASE("Segal maps of nerves are bijections") {
  for (auto& c : small_categories()) {
    auto x = disc_nerve(c, 4);
    CHECK(check_segal_discrete(x, 4));
  }
  CHECK(check_segal_discrete(disc(standard(0)), 4));
  auto s = segal_map(disc_nerve(ordinal_category(2)), 2);
  // Both sides are the triples i <= j <= k in [2].
  CHECK(s.map.source().cells({0}).size() == 10);
  CHECK(s.map.target().cells({0}).size() == 10);
}

TEST_CASE("Segal maps detect missing composites") {
  CHECK_FALSE(check_segal_discrete(disc(boundary(2)), 2));
  auto d1 = standard(1);
  auto ends = coproduct<1>({standard(0), standard(0)});
  auto a = SSetMap(ends.object, d1, {d1->generator_cell(*d1->find_label("0")), d1->generator_cell(*d1->find_label("1"))});
  auto b = SSetMap(ends.object, d1, {d1->generator_cell(*d1->find_label("1")), d1->generator_cell(*d1->find_label("0"))});
  Pushout<1> circle(a, b);
  CHECK_FALSE(check_segal_discrete(disc(circle.object()), 2));
  CHECK_THROWS_AS(check_segal_discrete(constant(standard(1)), 2), std::invalid_argument);
}

TEST_CASE("mapping sets and identities") {
  auto c = ordinal_category(1);
  auto x = disc_nerve(c);
  auto v = objects_of(*x);
  REQUIRE(v.size() == 2);
  CHECK(mapping_set(*x, v[0].gen, v[1].gen).size() == 1);
  CHECK(mapping_set(*x, v[1].gen, v[0].gen).empty());
  auto id = identity_elt(*x, v[0].gen);
  auto homs = mapping_set(*x, v[0].gen, v[0].gen);
  REQUIRE(homs.size() == 1);
  CHECK(homs[0] == id);
  for (auto& cat : small_categories()) {
    auto n = disc_nerve(cat, 3);
    auto verts = objects_of(*n);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j)
        CHECK(mapping_set(*n, verts[i].gen, verts[j].gen).size() ==
              cat.hom(static_cast<int>(i), static_cast<int>(j)).size());
  }
}

TEST_CASE("homotopy category round trip") {
  for (auto& c : small_categories()) {
    auto ho = homotopy_category(disc_nerve(c, 3));
    CHECK(find_cat_isomorphism(ho.category, c).has_value());
  }
  auto terminal = homotopy_category(disc(standard(0)));
  CHECK(terminal.category.objects.size() == 1);
  CHECK(terminal.category.arrows.size() == 1);
  // Z/3: the table is the group law.
  auto z3 = cyclic_group(3);
  auto ho = homotopy_category(disc_nerve(z3, 3));
  auto iso = find_cat_isomorphism(ho.category, z3);
  REQUIRE(iso);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(iso->on_arrows[static_cast<std::size_t>(ho.category.comp(b, a))] ==
            (iso->on_arrows[static_cast<std::size_t>(a)] + iso->on_arrows[static_cast<std::size_t>(b)]) % 3);
  CHECK_FALSE(find_cat_isomorphism(ordinal_category(1), discrete_category(2)).has_value());
}

TEST_CASE("completeness") {
  CHECK(is_complete_discrete(disc_nerve(poset(3, {{0, 1}, {1, 2}}))).complete);
  auto z2 = is_complete_discrete(disc_nerve(cyclic_group(2), 4));
  CHECK_FALSE(z2.complete);
  CHECK(z2.heq == 2);
  CHECK(z2.objects == 1);
  CHECK(is_complete_discrete(disc_nerve(discrete_category(3))).complete);
  CHECK_FALSE(is_complete_discrete(disc_nerve(connected_groupoid(2, 1), 3)).complete);
}

TEST_CASE("isomorphisms form a subgroupoid") {
  for (auto& c : small_categories()) {
    auto ho = homotopy_category(disc_nerve(c, 3));
    std::vector<bool> inv(ho.category.size());
    for (std::size_t f = 0; f < inv.size(); ++f) inv[f] = ho.category.is_invertible(static_cast<int>(f));
    for (int id : ho.category.identity) CHECK(inv[static_cast<std::size_t>(id)]);
    for (std::size_t f = 0; f < inv.size(); ++f)
      for (std::size_t g = 0; g < inv.size(); ++g) {
        int gf = ho.category.comp(static_cast<int>(g), static_cast<int>(f));
        if (gf >= 0 && inv[f] && inv[g]) CHECK(inv[static_cast<std::size_t>(gf)]);
      }
  }
}

TEST_CASE("prime components") {
  for (auto& c : small_categories()) {
    auto p = prime_components(disc_nerve(c, 3));
    CHECK(p.matches);
    CHECK(p.x1.size() == c.objects.size());
  }
  auto z2 = prime_components(disc_nerve(cyclic_group(2), 3));
  CHECK(z2.d12.size() == 2);
  auto pt = prime_components(disc(standard(0)));
  CHECK(pt.matches);
  CHECK(pt.heq.size() == 1);
}

TEST_CASE("fully faithful maps") {
  auto c = ordinal_category(2);
  auto sub = ordinal_category(1);
  auto nc = nerve(c), ns = nerve(sub);
  // {0, 2} as a full subcategory of [2].
  Functor incl{{0, 2}, {}};
  for (auto& a : sub.arrows) {
    int s = incl.on_objects[static_cast<std::size_t>(a.source)], t = incl.on_objects[static_cast<std::size_t>(a.target)];
    incl.on_arrows.push_back(c.hom(s, t).front());
  }
  auto xs = disc(ns.object), xc = disc(nc.object);
  auto f = disc(nerve_map(ns, nc, sub, c, incl), xs, xc);
  CHECK(fully_faithful_discrete(f));
  CHECK(fully_faithful_discrete(BiMap::identity(xc)));

  auto pp = parallel_pair();
  auto npp = nerve(pp);
  Functor collapse{{0, 1}, {}};
  for (auto& a : pp.arrows) collapse.on_arrows.push_back(sub.hom(a.source, a.target).front());
  auto g = disc(nerve_map(npp, ns, pp, sub, collapse), disc(npp.object), xs);
  CHECK_FALSE(fully_faithful_discrete(g));

  // Composition of fully faithful maps.
  Functor point_in{{1}, {c.identity[1]}};
  auto n0 = nerve(ordinal_category(0));
  auto x0 = disc(n0.object);
  auto h = disc(nerve_map(n0, ns, ordinal_category(0), sub, Functor{{1}, {sub.identity[1]}}), x0, xs);
  CHECK(fully_faithful_discrete(h));
  CHECK(fully_faithful_discrete(compose(f, h)));
  CHECK_THROWS_AS(validate_functor(pp, sub, Functor{{1, 0}, {0, 1, 2, 2}}), std::invalid_argument);
  (void)point_in;
}

TEST_CASE("mapping spaces as virtual simplicial sets") {
  auto x = horn(2, 1);
  auto m = map_space(standard(0), x);
  for (int n = 0; n <= 2; ++n) CHECK(m.level(n).size() == x->cells({n}).size());
  CHECK(m.levels_cached() == 3);
  auto m2 = map_space(standard(1), standard(1));
  CHECK(m2.level(0).size() == 3);
  CHECK(m2.level(1).size() == hom_count(*Product<1>(standard(1), standard(1)).object(), *standard(1)));
}
