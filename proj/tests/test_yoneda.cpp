#include "doctest.h"
#include "segalkit/lifting.hpp"
#include "segalkit/yoneda.hpp"

using namespace segalkit;

namespace {

std::uint32_t vertex_of(const Nerve& n, int object) { return n.simplex_of(0, {object}).gen; }

std::size_t chains_from(const FinCat& c, int n, int x) {
  std::size_t count = 0;
  for (auto& ch : chains(c, n))
    if (chain_objects(c, n, ch).front() == x) ++count;
  return count;
}

SetFunctor constant_singleton(const FinCat& c) {
  SetFunctor f;
  f.sizes.assign(c.objects.size(), 1);
  f.on_arrows.assign(c.arrows.size(), {0});
  return f;
}

/// C = [1], F(0) = {a}, F(1) = {a', b'}, a -> a'.
SetFunctor two_point_target() {
  SetFunctor f;
  f.sizes = {1, 2};
  auto c = ordinal_category(1);
  for (auto& a : c.arrows) {
    if (a.source == 0 && a.target == 0) f.on_arrows.push_back({0});
    else if (a.source == 1) f.on_arrows.push_back({0, 1});
    else f.on_arrows.push_back({0});
  }
  return f;
}

std::vector<FinCat> corpus() {
  return {ordinal_category(1), ordinal_category(2), discrete_category(2), parallel_pair(),
          poset(3, {{0, 1}, {0, 2}}), cyclic_group(2)};
}

int nerve_dim(const FinCat& c) { return c.chain_bound() ? *c.chain_bound() : 4; }

}  // namespace

TEST_CASE("undercategory levels") {
  auto c = ordinal_category(1);
  auto n = nerve(c);
  auto x = disc(n.object);
  auto u = under(x, vertex_of(n, 0));
  CHECK(u.object->cells({0, 0}).size() == 2);
  CHECK(u.projection.image(u.id_x) == x->generator_cell(vertex_of(n, 0)));
  auto u1 = under(x, vertex_of(n, 1));
  CHECK(u1.object->cells({0, 0}).size() == 1);

  // Level 0 is {x} x_{X_0} X_1.
  for (auto& cat : corpus()) {
    auto nc = nerve(cat, nerve_dim(cat));
    auto xc = disc(nc.object);
    for (int o = 0; o < static_cast<int>(cat.objects.size()); ++o) {
      auto uo = under(xc, vertex_of(nc, o), 1, 0);
      CHECK(uo.object->cells({0, 0}).size() == chains_from(cat, 1, o));
    }
  }

  auto pt = disc(standard(0));
  auto up = under(pt, 0, 2, 1);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b) CHECK(up.object->cells({a, b}).size() == 1);
  CHECK_THROWS_AS(under(disc(standard(1)), 2), std::invalid_argument);
}

TEST_CASE("undercategory retraction") {
  auto n = nerve(ordinal_category(2));
  auto x = disc(n.object);
  for (int o = 0; o <= 2; ++o) {
    auto rep = under_retraction(x, vertex_of(n, o), 2, 2);
    CHECK(rep.id_to_id);
    CHECK(rep.section);
    CHECK(rep.m_kills_a);
    CHECK(rep.cells_checked > 0);
  }
  auto cons = constant(standard(1));
  CHECK(under_retraction(cons, 0, 1, 1).ok());
}

TEST_CASE("tilde undercategory and the psi maps") {
  for (auto& cat : corpus()) {
    const bool bounded = cat.chain_bound().has_value();
    const int top = bounded ? 2 : 1;
    auto nc = nerve(cat, bounded ? std::max(*cat.chain_bound(), 2 * top + 1) : 2 * top + 1);
    auto x = disc(nc.object);
    for (int o = 0; o < static_cast<int>(cat.objects.size()); ++o) {
      auto t = tilde_under(x, vertex_of(nc, o), top, 0);
      for (int k = 0; k <= top; ++k) CHECK(t.object->cells({k, 0}).size() == chains_from(cat, k + 1, o));
      auto rep = check_psi(x, vertex_of(nc, o), top);
      CHECK(rep.prime_over_x);
      CHECK(rep.dprime_over_x);
      CHECK(rep.level0_identity);
      CHECK(rep.dprime_injective);
      CHECK(rep.section);
    }
  }
}

TEST_CASE("set functors") {
  auto c = ordinal_category(1);
  CHECK_NOTHROW(validate_set_functor(c, two_point_target()));
  auto bad = two_point_target();
  bad.on_arrows[0] = {1};
  CHECK_THROWS_AS(validate_set_functor(c, bad), std::invalid_argument);
  auto h = representable(cyclic_group(3), 0);
  CHECK(h.sizes == std::vector<int>{3});
  CHECK_NOTHROW(validate_set_functor(cyclic_group(3), h));
}

TEST_CASE("category of elements") {
  auto c = ordinal_category(1);
  auto e = elements(c, two_point_target());
  CHECK(e.fiber(0).size() == 1);
  CHECK(e.fiber(1).size() == 2);
  CHECK(e.total_sset->generators_of_degree({1}).size() == 1);
  CHECK(e.total_sset->generators_of_degree({0}).size() == 3);
  CHECK(check_left_fibration(e.projection, 3).holds);

  for (auto& cat : corpus()) {
    const int d = nerve_dim(cat);
    auto one = elements(cat, constant_singleton(cat), d);
    CHECK(isomorphic(one.total_sset, one.base_nerve.object));
    for (int o = 0; o < static_cast<int>(cat.objects.size()); ++o) {
      auto rep = elements(cat, representable(cat, o), d);
      CHECK(rep.fiber(o).size() == cat.hom(o, o).size());
      CHECK(check_left_fibration(rep.projection, 2).holds);
    }
  }

  SetFunctor pre;
  pre.contravariant = true;
  pre.sizes = {2, 1};
  for (auto& a : c.arrows) pre.on_arrows.push_back(a.target == 0 ? std::vector<int>{0, 1} : a.source == 1 ? std::vector<int>{0} : std::vector<int>{0});
  auto ep = elements(c, pre);
  CHECK_FALSE(check_left_fibration(ep.projection, 3).holds);
}

TEST_CASE("representable elements match the twisted fiber") {
  for (auto& cat : {ordinal_category(1), ordinal_category(2), poset(3, {{0, 1}, {0, 2}}), cyclic_group(2)}) {
    const int top = 2;
    auto nc = nerve(cat, 2 * top + 1);
    auto x = disc(nc.object);
    for (int o = 0; o < static_cast<int>(cat.objects.size()); ++o) {
      auto e = elements(cat, representable(cat, o), top);
      auto fib = twisted_fiber(x, vertex_of(nc, o), top, 0);
      CHECK(find_isomorphism<2>(e.total, fib.object).has_value());
    }
  }
}

TEST_CASE("evaluation at the identity") {
  auto c = ordinal_category(1);
  auto e = elements(c, two_point_target());
  auto rep = evaluation_check(e, 0, 2);
  CHECK(rep.maps == 1);
  CHECK(rep.bijective());

  SetFunctor empty;
  empty.sizes = {0, 1};
  for (auto& a : c.arrows) empty.on_arrows.push_back(a.source == 0 ? std::vector<int>{} : std::vector<int>{0});
  auto none = evaluation_check(elements(c, empty), 0, 2);
  CHECK(none.maps == 0);
  CHECK(none.fiber == 0);
  CHECK(none.bijective());

  for (auto& cat : corpus()) {
    const int d = cat.chain_bound() ? std::max(*cat.chain_bound(), 4) : 4;
    for (int o = 0; o < static_cast<int>(cat.objects.size()); ++o) {
      auto r = evaluation_check(elements(cat, representable(cat, o), d), o, 3);
      CHECK(r.bijective());
      CHECK(r.fiber == cat.hom(o, o).size());
    }
  }
}

TEST_CASE("Yoneda fibers") {
  auto sizes = [](const YonedaReport& r) {
    std::vector<std::size_t> out;
    for (auto& f : r.fibers) out.push_back(f[2]);
    return out;
  };
  auto r1 = fully_faithful_yoneda_check(ordinal_category(1));
  CHECK(r1.ok());
  CHECK(sizes(r1) == std::vector<std::size_t>{1, 1, 0, 1});
  auto z2 = fully_faithful_yoneda_check(cyclic_group(2), 3);
  CHECK(z2.ok());
  CHECK(sizes(z2) == std::vector<std::size_t>{2});
  auto g = fully_faithful_yoneda_check(connected_groupoid(2, 2), 3);
  CHECK(g.ok());
  for (auto s : sizes(g)) CHECK(s == 2);
  auto d = fully_faithful_yoneda_check(discrete_category(3));
  CHECK(d.ok());
  CHECK(sizes(d) == std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(fully_faithful_yoneda_check(parallel_pair()).ok());
}
