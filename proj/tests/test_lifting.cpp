#include <random>

#include "doctest.h"
#include "segalkit/lifting.hpp"

using namespace segalkit;

namespace {

std::uint32_t vertex_gen(const FinSSet& x, const Simplex& s, int i) { return x.vertex(s, {i}).gen; }

/// A random subobject of box(a, b) generated by a random set of generators.
BiSet random_sub_box(std::mt19937& rng, int a, int b) {
  auto bx = box(a, b);
  std::vector<bool> seeds(bx->size());
  std::bernoulli_distribution coin(0.35);
  for (std::size_t g = 0; g < seeds.size(); ++g) seeds[g] = coin(rng);
  seeds[rng() % seeds.size()] = true;
  return generated_subobject<2>(bx, seeds).object;
}

BiSet random_small(std::mt19937& rng) {
  static const int shapes[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
  auto& s = shapes[rng() % 6];
  return random_sub_box(rng, s[0], s[1]);
}

}  // namespace

TEST_CASE("lifts against an isomorphism is unique") {
  auto d2 = standard(2);
  auto d1 = standard(1);
  auto id = SSetMap::identity(d2);
  for (auto& a : hom_enum<1>(d2, d1)) {
    auto p = SSetMap::identity(d1);
    LiftingProblem<1> prob(id, p, a, a);
    CHECK(lifts(prob).size() == 1);
  }
}

TEST_CASE("horn fillers in the interval") {
  auto d1 = standard(1);
  auto p = to_point<1>(d1);
  auto b = to_point<1>(standard(2));
  for (int k = 0; k <= 2; ++k) {
    auto h = horn(2, k);
    auto i = standard_inclusion(h, 2);
    auto bmap = to_point<1>(i.target_ptr());
    for (auto& a : hom_enum<1>(h, d1)) {
      // Oracle: vertex images v0, v1, v2 of the horn; a filler exists iff
      // they are weakly increasing.
      std::array<int, 3> v{};
      for (auto& g : h->generators_of_degree({0})) {
        int idx = std::stoi(h->generator(g).label);
        v[static_cast<std::size_t>(idx)] = std::stoi(d1->generator(a.assignment()[g].gen).label);
      }
      LiftingProblem<1> prob(i, p, a, bmap);
      auto ls = lifts(prob);
      bool monotone = v[0] <= v[1] && v[1] <= v[2];
      CHECK(ls.size() == (monotone ? 1u : 0u));
      if (k == 1) CHECK(ls.size() == 1);
      for (auto& c : ls) {
        CHECK(compose(c, i).assignment() == a.assignment());
        CHECK(compose(p, c).assignment() == bmap.assignment());
      }
      CHECK(lifts(prob).size() == ls.size());
    }
  }
  (void)b;
}

TEST_CASE("Kan horn family") {
  auto pt = standard(0);
  CHECK(has_rlp_family<1>(SSetMap::identity(pt), Family::KanHorn, 4).holds);
  auto r = has_rlp_family<1>(to_point<1>(standard(1)), Family::KanHorn, 3);
  CHECK_FALSE(r.holds);
  CHECK(r.certificate.rfind("horn(2,0)", 0) == 0);
}

TEST_CASE("has_rlp agrees with the family route on single members") {
  auto p = to_point<1>(standard(1));
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      auto i = standard_inclusion(horn(n, k), n);
      FamilyMember<1> member{"m", {n}, horn(n, k)};
      CHECK(has_rlp<1>(i, p).holds == has_rlp_member<1>(p, member).holds);
    }
}

TEST_CASE("trivial fibrations of simplicial sets") {
  // Delta[n] -> Delta[0] lifts against the boundary of Delta[1] only when
  // n = 0: the square sending the endpoints to vertices 1 and 0 needs an
  // edge from 1 to 0.
  for (int n = 0; n <= 2; ++n) {
    auto v = check_trivial_fibration(to_point<1>(standard(n)), n + 1);
    CHECK(v.holds == (n == 0));
    CHECK(v.complete);
    CHECK(v.tier() == "bounded(" + std::to_string(n + 1) + ")");
    if (n > 0) CHECK(v.certificate.rfind("boundary(1)", 0) == 0);
  }
  CHECK_FALSE(check_trivial_fibration(to_point<1>(boundary(1)), 2).holds);
  CHECK(check_trivial_fibration(SSetMap::identity(boundary(2)), 3).holds);
}

TEST_CASE("bisimplicial checks on identities and simple maps") {
  auto b11 = box(1, 1);
  auto id = BiMap::identity(b11);
  CHECK(check_reedy_fibration(id, 3).holds);
  CHECK(check_left_fibration(id, 3).holds);
  auto triv = check_trivial_fibration(id, 3);
  CHECK(triv.holds);
  CHECK(triv.extension);

  CHECK_FALSE(check_left_fibration(to_point<2>(F(1)), 3).holds);
  // Rows of disc(Delta[1]) are discrete, so its matching maps are maps of
  // discrete spaces and always Kan; the constant object has row Delta[1].
  CHECK(check_reedy_fibration(to_point<2>(disc(standard(1))), 3).holds);
  auto c = check_reedy_fibration(to_point<2>(constant(standard(1))), 3);
  CHECK_FALSE(c.holds);
  CHECK(c.certificate.rfind("reedy(0,", 0) == 0);
}

TEST_CASE("maps between discrete objects are Reedy fibrations") {
  std::vector<BiSet> objects{disc(standard(0)), disc(standard(1)), disc(boundary(2)), disc(horn(2, 0))};
  for (auto& x : objects)
    for (auto& y : objects)
      for (auto& f : hom_enum<2>(x, y)) CHECK(check_reedy_fibration(f, 3).holds);
}

TEST_CASE("box to point Reedy regression") {
  // Boxes are Reedy fibrant only when both axes are trivial or the second
  // factor is a Kan complex; Delta[1] is not.
  CHECK(check_reedy_fibration(to_point<2>(box(0, 0)), 3).holds);
  CHECK(check_reedy_fibration(to_point<2>(box(1, 0)), 3).holds == check_reedy_fibration(to_point<2>(F(1)), 3).holds);
  CHECK_FALSE(check_reedy_fibration(to_point<2>(box(0, 1)), 3).holds);
}

TEST_CASE("family members have the expected shape") {
  auto reedy = family_members<2>(Family::Reedy, 2);
  for (auto& m : reedy) {
    m.sub->validate();
    CHECK(m.sub->size() < box(m.top[0], m.top[1])->size());
  }
  auto left = family_members<2>(Family::Left, 2);
  CHECK(left.front().name == "left(1,0)");
  // left(1,0): the initial vertex of F[1].
  CHECK(left.front().sub->size() == 1);
  CHECK_THROWS(family_members<1>(Family::Left, 2));
  CHECK_THROWS(family_members<2>(Family::KanHorn, 2));
}

TEST_CASE("dual routes agree on random small maps") {
  std::mt19937 rng(20261019);
  int decided = 0;
  for (int trial = 0; decided < 120 && trial < 2000; ++trial) {
    auto x = random_small(rng);
    auto y = random_small(rng);
    auto maps = hom_enum<2>(x, y);
    if (maps.empty()) continue;
    auto& p = maps[rng() % maps.size()];
    CHECK_NOTHROW(check_left_fibration(p, 3));
    CHECK_NOTHROW(check_trivial_fibration(p, 3));
    ++decided;
  }
  CHECK(decided >= 100);
}

TEST_CASE("pullbacks of left fibrations are left fibrations") {
  std::mt19937 rng(7);
  int found = 0;
  for (int trial = 0; trial < 400 && found < 12; ++trial) {
    auto x = random_small(rng);
    auto y = random_small(rng);
    auto maps = hom_enum<2>(x, y);
    if (maps.empty()) continue;
    auto& q = maps[rng() % maps.size()];
    if (!check_left_fibration(q, 3).holds) continue;
    ++found;
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; n + m <= 2; ++m)
        for (auto& f : hom_enum<2>(box(n, m), q.target_ptr())) {
          auto pb = pullback<2>(q, f);
          CHECK(check_left_fibration(pb.second(), 3).holds);
        }
  }
  CHECK(found >= 5);
}

TEST_CASE("composites of trivial fibrations") {
  std::vector<SSet> objects{standard(0), standard(1), standard(2), boundary(2), horn(2, 1)};
  std::vector<SSetMap> trivial;
  for (auto& x : objects)
    for (auto& y : objects)
      for (auto& f : hom_enum<1>(x, y))
        if (check_trivial_fibration(f, 3).holds) trivial.push_back(f);
  CHECK(trivial.size() >= objects.size());
  int composites = 0;
  for (auto& f : trivial)
    for (auto& g : trivial)
      if (f.target_ptr() == g.source_ptr()) {
        CHECK(check_trivial_fibration(compose(g, f), 3).holds);
        ++composites;
      }
  CHECK(composites > 0);
}

TEST_CASE("retract of the initial vertex") {
  for (int n = 0; n <= 5; ++n) {
    auto r = retract_delta0(n);
    CHECK(r.ok());
  }
  auto r0 = retract_delta0(0);
  CHECK(r0.alpha_first.dom() == 1);
  CHECK(r0.alpha_second(0) == 0);
  CHECK(r0.alpha_second(1) == 1);
  for (int n = 0; n <= 2; ++n) {
    auto maps = retract_delta0_maps(n);
    auto all = retract_witnesses<1>(maps.f, maps.g);
    REQUIRE_FALSE(all.empty());
    bool found = false;
    for (auto& w : all)
      if (w.s0.assignment() == maps.witness.s0.assignment() && w.s1.assignment() == maps.witness.s1.assignment() &&
          w.r0.assignment() == maps.witness.r0.assignment() && w.r1.assignment() == maps.witness.r1.assignment())
        found = true;
    CHECK(found);
  }
}

TEST_CASE("retracts of maps") {
  auto f = to_point<1>(standard(1));
  auto w = is_retract<1>(f, f);
  REQUIRE(w.has_value());
  CHECK(w->s0.is_identity());
  CHECK(w->s1.is_identity());
  CHECK_FALSE(is_retract<1>(to_point<1>(boundary(1)), to_point<1>(standard(1))).has_value());
}
