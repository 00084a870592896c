#include "doctest.h"
#include "segalkit/bisset.hpp"

using namespace segalkit;

namespace {

std::vector<BiSet> corpus() {
  return {box(1, 1), boundary_box(1, 1), F(2), dF(2), Fhorn(2, 1), constant(standard(1)), disc(boundary(2)),
          box(2, 1), coproduct<2>({F(1), constant(standard(1))}).object};
}

bool iso(const BiSet& a, const BiSet& b) { return find_isomorphism<2>(a, b).has_value(); }

}  // namespace

TEST_CASE("standard bisimplices") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      auto b = box(n, m);
      for (int a = 0; a <= n; ++a)
        for (int c = 0; c <= m; ++c)
          CHECK(b->generators_of_degree({a, c}).size() == binomial(n + 1, a + 1) * binomial(m + 1, c + 1));
      CHECK(boundary_box(n, m)->size() + 1 == b->size());
    }
  CHECK(box(1, 1)->cells({1, 1}).size() == 9);
  for (int n = 0; n <= 3; ++n) {
    CHECK(iso(box(n, 0), F(n)));
    CHECK(iso(box(0, n), constant(standard(n))));
    CHECK(iso(F(n), disc(standard(n))));
  }
  CHECK(iso(boundary_box(1, 0), dF(1)));
  CHECK(dF(1)->size() == 2);
  CHECK(Fhorn(2, 1)->generators_of_degree({1, 0}).size() == 2);
  CHECK_THROWS_AS(box(-1, 0), RangeError);
}

TEST_CASE("rows and columns") {
  for (int n = 0; n <= 2; ++n)
    for (int k = 0; k <= 3; ++k) {
      auto r = row(F(n), k);
      CHECK(r.object()->dimension()[0] == 0);
      CHECK(r.object()->size() == binomial(n + k + 1, k + 1));
    }
  for (int n = 0; n <= 2; ++n) CHECK(isomorphic(row(constant(boundary(2)), n).object(), boundary(2)));
  auto r0 = row(box(1, 1), 0, 3);
  for (int m = 0; m <= 3; ++m) CHECK(r0.object()->cells({m}).size() == static_cast<std::size_t>(2 * (m + 2)));
  auto c = column(box(2, 1), 0);
  CHECK(isomorphic(c.object(), coproduct<1>({standard(2), standard(2)}).object));
}

TEST_CASE("reindexing") {
  for (auto& x : corpus()) {
    auto op = opposite(x);
    auto opop = opposite(op.object());
    CHECK(iso(opop.object(), x));
    auto tw = twisted(x);
    CHECK(isomorphic(row(tw.object(), 0).object(), row(x, 1).object()));
  }
  CHECK(iso(opposite(F(1)).object(), F(1)));
  CHECK(iso(opposite(F(2)).object(), F(2)));
}

TEST_CASE("twist projection") {
  auto x = disc(standard(1));
  auto tp = twist_projection(x);
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> count;
  for (auto& w : tp.twisted->object()->cells({0, 0})) {
    auto img = tp.map.image(w);
    auto a = tp.opposite->source_cell(tp.product->first().image(img));
    auto b = tp.product->second().image(img);
    ++count[{a.gen, b.gen}];
  }
  auto v = x->generators_of_degree({0, 0});
  CHECK(count[{v[0], v[0]}] == 1);
  CHECK(count[{v[0], v[1]}] == 1);
  CHECK(count[{v[1], v[0]}] == 0);
  CHECK(count[{v[1], v[1]}] == 1);

  // Naturality in X for every map between small objects.
  std::vector<BiSet> small = {F(0), F(1), dF(1), Fhorn(2, 0), disc(boundary(2))};
  std::size_t maps = 0;
  for (auto& s : small)
    for (auto& t : small) {
      auto ps = twist_projection(s, 3), pt = twist_projection(t, 3);
      for (auto& f : hom_enum<2>(s, t)) {
        auto left = compose(pt.map, reindex_map(*ps.twisted, *pt.twisted, f));
        auto right = compose(product_map<2>(*ps.product, *pt.product, reindex_map(*ps.opposite, *pt.opposite, f), f), ps.map);
        CHECK(left.assignment() == right.assignment());
        ++maps;
      }
    }
  CHECK(maps > 20);
}

TEST_CASE("bisimplicial limits") {
  Product<2> p(F(1), F(1));
  CHECK(p.object()->generators_of_degree({2, 0}).size() == 2);
  Product<2> q(box(1, 1), Fhorn(2, 1));
  CHECK(iso(fiber<2>(q.first(), 0).object(), Fhorn(2, 1)));
}

TEST_CASE("skeleta and the pushout presentation") {
  CHECK(iso(bis_skeleton(box(1, 1), 1).object, boundary_box(1, 1)));
  CHECK(bis_skeleton(box(2, 2), -1).object->empty());
  for (int n = 0; n <= 3; ++n) {
    auto nd = nondegenerate(*F(n));
    for (auto& [d, gens] : nd) {
      CHECK(d[1] == 0);
      CHECK(gens.size() == binomial(n + 1, d[0] + 1));
    }
  }
  for (auto& x : corpus())
    for (int n = 0; n <= 3; ++n) {
      auto sp = skeleton_pushout(x, n);
      CHECK(sp.isomorphism);
      std::size_t expected = 0;
      for (auto& g : x->generators()) expected += total<2>(g.degree) == n;
      CHECK(sp.cells.size() == expected);
    }
}

TEST_CASE("tau decomposition") {
  for (int m = 0; m <= 2; ++m) {
    auto base = disc(boundary(2));
    Product<2> target(base, F(m));
    auto id = BiMap::identity(target.object());
    BiMap p(target.object(), target.object(), id.assignment());
    for (int n = 0; n <= 3; ++n) {
      auto dec = tau_decompose(p, target, m, n);
      CHECK(dec.pieces.size() == binomial(n + m + 1, n + 1));
      std::size_t total_size = 0;
      for (auto& piece : dec.pieces) total_size += piece.piece.object->size();
      CHECK(total_size == dec.row->object()->size());
      if (m == 0) CHECK(dec.pieces[0].piece.object->size() == dec.row->object()->size());
    }
  }
}
