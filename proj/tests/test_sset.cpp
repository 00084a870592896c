#include <random>

#include "doctest.h"
#include "segalkit/sset.hpp"

using namespace segalkit;

namespace {

SSetMap vertex_inclusion(const SSet& target, std::uint32_t v, SSet pt = standard(0)) {
  return SSetMap(pt, target, {target->generator_cell(v)});
}

std::vector<SSet> corpus() {
  return {standard(0), standard(1), standard(2), boundary(2), horn(2, 1), horn(3, 0), boundary(1),
          coproduct<1>({standard(1), boundary(2)}).object};
}

/// Maps into t that agree after precomposition: the pairs a pushout must classify.
std::size_t compatible_pairs(const SSetMap& f, const SSetMap& g, const SSet& t) {
  std::size_t n = 0;
  for (auto& u : hom_enum<1>(f.target_ptr(), t))
    for (auto& v : hom_enum<1>(g.target_ptr(), t))
      if (compose(u, f).assignment() == compose(v, g).assignment()) ++n;
  return n;
}

}  // namespace

TEST_CASE("standard objects") {
  auto d1 = standard(1);
  CHECK(d1->generators_of_degree({0}).size() == 2);
  CHECK(d1->generators_of_degree({1}).size() == 1);
  auto b1 = boundary(1);
  CHECK(b1->generators_of_degree({1}).empty());
  CHECK(pi0(*b1).count() == 2);
  auto h = horn(2, 1);
  CHECK(h->generators_of_degree({0}).size() == 3);
  CHECK(h->generators_of_degree({1}).size() == 2);
  CHECK(h->find_label("01").has_value());
  CHECK(h->find_label("12").has_value());
  CHECK_FALSE(h->find_label("02").has_value());
  CHECK_THROWS(horn(2, 3));
  for (int n = 1; n <= 4; ++n) {
    auto b = boundary(n);
    for (int d = 0; d < n; ++d) CHECK(b->generators_of_degree({d}).size() == binomial(n + 1, d + 1));
    CHECK(b->generators_of_degree({n}).empty());
  }
}

TEST_CASE("levels and the simplicial action") {
  CHECK(levels(*standard(0), 3).size() == 1);
  CHECK(levels(*standard(1), 1).size() == 3);
  CHECK(levels(*boundary(2), 1).size() == 6);
  CHECK(hom_enum<1>(standard(1), boundary(2)).size() == 6);
  auto d2 = standard(2);
  auto top = d2->generator_cell(d2->generators_of_degree({2})[0]);
  auto f0 = apply(*d2, face(0, 2), top);
  CHECK(d2->generator(f0.gen).label == "12");
  CHECK(apply(*d2, OrdinalMap::identity(2), top) == top);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 2; ++c)
        for (auto& s : levels(*d2, c))
          for (auto& tau : enumerate_maps(b, c))
            for (auto& sigma : enumerate_maps(a, b))
              CHECK(apply(*d2, compose(tau, sigma), s) == apply(*d2, sigma, apply(*d2, tau, s)));

  // Eilenberg-Zilber: (epi, generator) pairs are exactly the simplices.
  for (auto& x : corpus())
    for (int n = 0; n <= 4; ++n) {
      std::size_t pairs = 0;
      for (auto& g : x->generators()) pairs += enumerate_surjections(n, g.degree[0]).size();
      CHECK(levels(*x, n).size() == pairs);
      CHECK(x->cells({n}).size() == hom_enum<1>(standard(n), x).size());
    }
}

TEST_CASE("limits and colimits") {
  Product<1> p(standard(1), standard(1));
  CHECK(levels(*p.object(), 1).size() == 9);
  CHECK(p.object()->generators_of_degree({2}).size() == 2);
  Product<1> unit(standard(0), boundary(2));
  CHECK(isomorphic(unit.object(), boundary(2)));
  // Universal property against cones from standard objects.
  for (auto& x : {standard(1), horn(2, 1)})
    for (auto& y : {standard(1), boundary(2)}) {
      Product<1> xy(x, y);
      for (int k = 0; k <= 2; ++k)
        CHECK(hom_enum<1>(standard(k), xy.object()).size() ==
              hom_enum<1>(standard(k), x).size() * hom_enum<1>(standard(k), y).size());
    }

  // boundary(2) as three edges glued along vertices.
  auto e = standard(1);
  auto three = coproduct<1>({e, e, e});
  auto verts = coproduct<1>({standard(0), standard(0), standard(0)});
  auto pick = [&](std::size_t edge, int end) {
    return three.inclusions[edge].image(e->generator_cell(static_cast<std::uint32_t>(end)));
  };
  // Vertex 0: end of edge 0 (01) meets start... glue 01.1 = 12.0, 12.1 = 02.1, 01.0 = 02.0.
  std::vector<Simplex> a = {pick(0, 1), pick(1, 1), pick(0, 0)};
  std::vector<Simplex> b = {pick(1, 0), pick(2, 1), pick(2, 0)};
  std::vector<Simplex> left_a, right_a;
  for (std::uint32_t i = 0; i < 3; ++i) {
    left_a.push_back(a[i]);
    right_a.push_back(b[i]);
  }
  SSetMap lm(verts.object, three.object, {left_a[0], left_a[1], left_a[2]});
  SSetMap rm(verts.object, three.object, {right_a[0], right_a[1], right_a[2]});
  // Coequalise by a pushout of the fold with the pair.
  auto both = coproduct<1>({verts.object, verts.object});
  std::vector<Simplex> fold_a, pair_a;
  for (std::uint32_t i = 0; i < both.object->size(); ++i) {
    fold_a.push_back(verts.object->generator_cell(i % 3));
  }
  for (std::uint32_t i = 0; i < 3; ++i) pair_a.push_back(lm.assignment()[i]);
  for (std::uint32_t i = 0; i < 3; ++i) pair_a.push_back(rm.assignment()[i]);
  SSetMap fold(both.object, verts.object, fold_a);
  SSetMap pair(both.object, three.object, pair_a);
  Pushout<1> glued(fold, pair);
  CHECK(isomorphic(glued.object(), boundary(2)));

  // Pushout universal property.
  auto d0 = standard(0);
  for (auto& x : {standard(1), standard(2)})
    for (auto& y : {standard(1), boundary(2)}) {
      auto f = vertex_inclusion(x, 0), g = vertex_inclusion(y, 1);
      Pushout<1> po(f, g);
      for (auto& t : {standard(1), standard(2), boundary(2)})
        CHECK(hom_enum<1>(po.object(), t).size() == compatible_pairs(f, g, t));
    }
  Pushout<1> along_id(SSetMap::identity(standard(1)), SSetMap::identity(standard(1)));
  CHECK(isomorphic(along_id.object(), standard(1)));

  // Fiber of a projection.
  Product<1> xy(standard(1), horn(2, 0));
  auto fib = fiber<1>(xy.first(), 0);
  CHECK(isomorphic(fib.object(), horn(2, 0)));
}

TEST_CASE("components") {
  for (int n = 0; n <= 3; ++n) CHECK(pi0(*standard(n)).count() == 1);
  for (auto& x : corpus())
    for (auto& y : corpus())
      CHECK(pi0(*coproduct<1>({x, y}).object).count() == pi0(*x).count() + pi0(*y).count());
  auto c = pi0(*coproduct<1>({standard(1), standard(0)}).object);
  CHECK(c.representative.size() == 2);
}

TEST_CASE("hom enumeration and mapping spaces") {
  CHECK(hom_enum<1>(standard(1), standard(1)).size() == 3);
  CHECK(hom_enum<1>(horn(2, 1), standard(1)).size() == 4);
  for (auto& x : corpus()) CHECK(hom_enum<1>(x, standard(0)).size() == 1);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) CHECK(hom_enum<1>(standard(n), standard(m)).size() == binomial(n + m + 1, n + 1));
  for (int n = 0; n <= 2; ++n) CHECK(map_space_level(standard(0), boundary(2), n).size() == levels(*boundary(2), n).size());
  CHECK(map_space_level(standard(1), standard(1), 0).size() == 3);
  auto x = boundary(2);
  auto id = SSetMap::identity(x);
  bool has_identity = false;
  for (auto& h : map_space_over(id, id, 0))
    if (h.assignment().size() == x->size()) has_identity = true;
  CHECK(has_identity);

  auto d1 = standard(1), b1 = boundary(1), pt = standard(0);
  auto to_pt = [&](const SSet& s) { return SSetMap(s, pt, to_point<1>(s).assignment()); };
  CHECK(homotopic_over(to_pt(pt), to_pt(d1), vertex_inclusion(d1, 0, pt), vertex_inclusion(d1, 1, pt)));
  CHECK_FALSE(homotopic_over(to_pt(pt), to_pt(b1), vertex_inclusion(b1, 0, pt), vertex_inclusion(b1, 1, pt)));
  CHECK(homotopic_over(to_pt(pt), to_pt(b1), vertex_inclusion(b1, 0, pt), vertex_inclusion(b1, 0, pt)));
}

TEST_CASE("skeleta") {
  CHECK(isomorphic(skeleton<1>(standard(2), 1).object, boundary(2)));
  CHECK(skeleton<1>(standard(3), -1).object->empty());
  for (auto& x : corpus()) {
    const int top = x->dimension()[0];
    CHECK(isomorphic(skeleton<1>(x, top).object, x));
    for (int n = 0; n < top; ++n)
      CHECK(skeleton<1>(x, n).object->size() <= skeleton<1>(x, n + 1).object->size());
  }
}
