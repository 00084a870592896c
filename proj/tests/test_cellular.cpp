#include "doctest.h"
#include "segalkit/cellular.hpp"

using namespace segalkit;

namespace {
CellSetPtr<1> simplex(int n) { return standard_cells<1>({n}); }
}

TEST_CASE("standard simplex has binomial generator counts") {
  for (int n = 0; n <= 4; ++n) {
    auto d = simplex(n);
    for (int k = 0; k <= n; ++k) CHECK(d->generators_of_degree({k}).size() == binomial(n + 1, k + 1));
    for (int k = 0; k <= 3; ++k) CHECK(d->cells({k}).size() == binomial(n + k + 1, k + 1));
  }
}

TEST_CASE("hom counts between simplices") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      CHECK(hom_count(*simplex(n), *simplex(m)) == binomial(n + m + 1, n + 1));
}

TEST_CASE("product of two intervals") {
  Product<1> p(simplex(1), simplex(1));
  CHECK(p.object()->generators_of_degree({2}).size() == 2);
  CHECK(p.object()->generators_of_degree({1}).size() == 5);
  CHECK(p.object()->generators_of_degree({0}).size() == 4);
  p.object()->validate();
}

TEST_CASE("pushout of two intervals along a vertex") {
  auto d0 = simplex(0), d1 = simplex(1);
  auto end = standard_map<1>(d0, {0}, d1, {1}, {OrdinalMap(1, {1})});
  auto start = standard_map<1>(d0, {0}, d1, {1}, {OrdinalMap(1, {0})});
  Pushout<1> po(end, start);
  CHECK(po.object()->generators_of_degree({0}).size() == 3);
  CHECK(po.object()->generators_of_degree({1}).size() == 2);
  po.object()->validate();
  CHECK(hom_count(*po.object(), *simplex(1)) == 4);
}
