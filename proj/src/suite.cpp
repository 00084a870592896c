#include "segalkit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "segalkit/checks.hpp"
#include "segalkit/homology.hpp"
#include "segalkit/lifting.hpp"

namespace segalkit {

namespace {

// ---------------------------------------------------------------------------
// Corpus generation

FinCat random_poset(std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<int, int>> less;
    std::bernoulli_distribution coin(0.4);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (coin(rng)) less.emplace_back(a, b);
    auto c = poset(4, less);
    if (c.size() <= 8) return c;
  }
}

SetFunctor constant_singleton(const FinCat& c) {
  SetFunctor f;
  f.sizes.assign(c.objects.size(), 1);
  f.on_arrows.assign(c.size(), std::vector<int>{0});
  return f;
}

/// A random functor [n] -> Set given by functions F(i) -> F(i + 1).
SetFunctor random_chain_functor(const FinCat& c, std::mt19937_64& rng) {
  const int n = static_cast<int>(c.objects.size()) - 1;
  SetFunctor f;
  for (int i = 0; i <= n; ++i) f.sizes.push_back(1 + static_cast<int>(rng() % 3));
  std::vector<std::vector<int>> step(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < f.sizes[static_cast<std::size_t>(i)]; ++e)
      step[static_cast<std::size_t>(i)].push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(f.sizes[static_cast<std::size_t>(i) + 1])));
  for (auto& a : c.arrows) {
    std::vector<int> fun;
    for (int e = 0; e < f.sizes[static_cast<std::size_t>(a.source)]; ++e) {
      int v = e;
      for (int i = a.source; i < a.target; ++i) v = step[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
      fun.push_back(v);
    }
    f.on_arrows.push_back(std::move(fun));
  }
  return f;
}

/// A random Z/2-set: an involution on up to three points.
SetFunctor random_involution(const FinCat& z2, std::mt19937_64& rng) {
  const int size = 1 + static_cast<int>(rng() % 3);
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  if (size >= 2 && rng() % 2) std::swap(perm[0], perm[1]);
  SetFunctor f;
  f.sizes = {size};
  for (std::size_t a = 0; a < z2.size(); ++a) {
    if (z2.is_identity(static_cast<int>(a))) {
      std::vector<int> id(static_cast<std::size_t>(size));
      std::iota(id.begin(), id.end(), 0);
      f.on_arrows.push_back(id);
    } else {
      f.on_arrows.push_back(perm);
    }
  }
  return f;
}

BiSet random_sub_box(std::mt19937_64& rng, int a, int b) {
  auto bx = box(a, b);
  std::vector<bool> seeds(bx->size());
  std::bernoulli_distribution coin(0.35);
  for (std::size_t g = 0; g < seeds.size(); ++g) seeds[g] = coin(rng);
  seeds[rng() % seeds.size()] = true;
  return generated_subobject<2>(bx, seeds).object;
}

BiSet random_small(std::mt19937_64& rng) {
  static const int shapes[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
  auto& s = shapes[rng() % 6];
  return random_sub_box(rng, s[0], s[1]);
}

std::string numbered(const std::string& stem, std::size_t i) {
  std::string n = std::to_string(i);
  return stem + std::string(3 - std::min<std::size_t>(3, n.size()), '0') + n;
}

// ---------------------------------------------------------------------------
// Criterion helpers

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
  bool passed() const { return failed == 0; }
  Json json() const { return Json{{"checked", checked}, {"failed", failed}, {"failures", failures}}; }
};

std::string ord(const OrdinalMap& m) { return m.to_string(); }

Json c1_ordinal() {
  Tally t;
  constexpr int N = 4;
  for (int n = 2; n <= N; ++n) {
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        t.check(compose(face(j, n), face(i, n - 1)) == compose(face(i, n), face(j - 1, n - 1)),
                "d^j d^i, n=" + std::to_string(n));
  }
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        t.check(compose(degeneracy(j, n), degeneracy(i, n + 1)) == compose(degeneracy(i, n), degeneracy(j + 1, n + 1)),
                "s^j s^i, n=" + std::to_string(n));
  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        // s^j d^i : [n] -> [n + 1] -> [n].
        OrdinalMap lhs = compose(degeneracy(j, n), face(i, n + 1));
        OrdinalMap rhs;
        if (i < j)
          rhs = compose(face(i, n), degeneracy(j - 1, n - 1));
        else if (i == j || i == j + 1)
          rhs = OrdinalMap::identity(n);
        else
          rhs = compose(face(i - 1, n), degeneracy(j, n - 1));
        t.check(lhs == rhs, "s^" + std::to_string(j) + " d^" + std::to_string(i) + ", n=" + std::to_string(n));
      }
  std::size_t maps = 0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m)
      for (auto& f : enumerate_maps(n, m)) {
        ++maps;
        auto io = opposite(f);
        t.check(io.dom() == n && io.cod() == m, "opposite keeps endpoints " + ord(f));
        t.check(opposite(io) == f, "opposite involutive " + ord(f));
        auto mu = twist(f);
        t.check(mu.dom() == 2 * n + 1 && mu.cod() == 2 * m + 1, "twist on objects " + ord(f));
        for (int k = 0; k <= N; ++k)
          for (auto& g : enumerate_maps(m, k)) {
            auto gf = compose(g, f);
            t.check(opposite(gf) == compose(opposite(g), opposite(f)), "opposite functorial " + ord(g) + " o " + ord(f));
            t.check(twist(gf) == compose(twist(g), twist(f)), "twist functorial " + ord(g) + " o " + ord(f));
          }
      }
  for (int n = 0; n <= N; ++n) {
    t.check(opposite(OrdinalMap::identity(n)).is_identity(), "opposite of identity");
    t.check(twist(OrdinalMap::identity(n)).is_identity(), "twist of identity");
  }
  Json j = t.json();
  j["maps"] = maps;
  j["passed"] = t.passed();
  return j;
}

Json c2_counting() {
  Tally t;
  Json rows = Json::array();
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto count = hom_count<1>(*standard(n), *standard(m));
      auto expected = binomial(n + m + 1, n + 1);
      auto simplices = levels(*standard(m), n).size();
      t.check(count == expected, "|Hom(D" + std::to_string(n) + ", D" + std::to_string(m) + ")|");
      t.check(count == simplices, "Hom(D" + std::to_string(n) + ", D" + std::to_string(m) + ") vs simplices");
      t.check(count == enumerate_maps(n, m).size(), "Hom vs monotone maps");
      rows.push_back({n, m, count});
    }
  Json j = t.json();
  j["counts"] = rows;
  j["passed"] = t.passed();
  return j;
}

Json c3_prisms() {
  Tally t;
  // F(1) x F(1) against two copies of F(2) glued along their long edge.
  Product<2> square(F(1), F(1));
  auto diag = box_map(1, 0, 2, 0, {face(1, 2), OrdinalMap::identity(0)});
  auto edge = F(1);
  Pushout<2> glued(BiMap(edge, F(2), diag.assignment()), BiMap(edge, F(2), diag.assignment()));
  auto iso = find_isomorphism<2>(square.object(), glued.object());
  t.check(iso.has_value() && is_isomorphism<2>(*iso), "F(1) x F(1) vs F(2) + F(2)");
  Json pieces = Json::array();
  for (int n = 1; n <= 3; ++n) {
    auto p = prism_decomposition(n);
    t.check(p.counts_match, "prism counts n=" + std::to_string(n));
    t.check(p.isomorphism && is_isomorphism<2>(p.comparison), "prism isomorphism n=" + std::to_string(n));
    pieces.push_back({{"n", n}, {"legs", p.legs.size()}, {"cells", p.product->object()->size()}});
  }
  Json j = t.json();
  j["prisms"] = pieces;
  j["passed"] = t.passed();
  return j;
}

Json c4_retract() {
  Tally t;
  for (int n = 0; n <= 5; ++n) {
    auto r = retract_delta0(n);
    const std::string at = " n=" + std::to_string(n);
    t.check(r.beta_alpha_identity, "beta o alpha = Id" + at);
    t.check(r.alpha0_in_bottom, "alpha(0) in [n] x {0}" + at);
    t.check(r.beta_bottom_zero, "beta([n] x {0}) = {0}" + at);
  }
  for (int n = 0; n <= 2; ++n) {
    auto m = retract_delta0_maps(n);
    const auto& w = m.witness;
    t.check(compose(w.r0, w.s0).is_identity() && compose(w.r1, w.s1).is_identity(), "r o s = id as maps");
    t.check(compose(m.g, w.s0).assignment() == compose(w.s1, m.f).assignment(), "s is a map of arrows");
    t.check(compose(m.f, w.r0).assignment() == compose(w.r1, m.g).assignment(), "r is a map of arrows");
  }
  Json j = t.json();
  j["passed"] = t.passed();
  return j;
}

Json c5_cylinder(const Corpus& corpus) {
  Tally t;
  std::size_t pieces = 0;
  for (auto& [name, chain] : corpus.chains) {
    auto cyl = cyl_disc(chain);
    auto f = fiber_formula_check(chain, cyl, 3);
    pieces += f.pieces;
    t.check(f.ok(), name + (f.ok() ? "" : ": " + f.mismatches.front()));
    t.check(check_cylinder(chain, cyl).ok(), name + ": cylinder structure");
  }
  Json j = t.json();
  j["chains"] = corpus.chains.size();
  j["pieces"] = pieces;
  j["passed"] = t.passed() && corpus.chains.size() >= 50;
  return j;
}

/// Number of chains of n composable arrows, by counting paths.
std::size_t chain_count(const FinCat& c, int n) {
  std::vector<std::size_t> ending(c.objects.size(), 1);
  for (int k = 0; k < n; ++k) {
    std::vector<std::size_t> next(c.objects.size(), 0);
    for (auto& a : c.arrows) next[static_cast<std::size_t>(a.target)] += ending[static_cast<std::size_t>(a.source)];
    ending = next;
  }
  std::size_t total = 0;
  for (auto e : ending) total += e;
  return total;
}

bool same_members(const FamilyResult& a, const FamilyResult& b) {
  return a.holds == b.holds && a.per_member == b.per_member;
}

Json c6_left(const Corpus& corpus) {
  Tally routes, twists;
  std::size_t left = 0;
  for (auto& [name, p] : corpus.maps) {
    auto family = has_rlp_family<2>(p, Family::Left, 3);
    auto levelwise = left_levelwise_route(p, 3);
    routes.check(same_members(family, levelwise), name + ": initial-vertex routes");
    auto reedy = has_rlp_family<2>(p, Family::Reedy, 3);
    auto matching = reedy_matching_route(p, 3, false);
    routes.check(same_members(reedy, matching), name + ": Reedy routes");
    if (family.holds && reedy.holds) ++left;
  }
  Json bounds = Json::object();
  for (auto& [name, c] : corpus.categories) {
    if (!is_poset(c) && !is_groupoid(c)) continue;
    // The twisted object at level D reads nerve level 2D + 1.
    const int D = chain_count(c, 7) <= max_cells() ? 3 : 2;
    bounds[name] = D;
    auto tp = twist_projection(disc_nerve(c, nerve_truncation(c, 2 * D + 1)), D);
    twists.check(check_left_fibration(tp.map, D).holds, name);
  }
  Json j{{"routes", routes.json()}, {"twist_projections", twists.json()}, {"twist_bounds", bounds}, {"left_fibrations", left}};
  j["passed"] = routes.passed() && twists.passed() && corpus.maps.size() >= 100;
  return j;
}

Json c7_segal(const Corpus& corpus) {
  Tally t;
  for (auto& [name, c] : corpus.categories) {
    auto x = disc_nerve(c, nerve_truncation(c, 4));
    t.check(check_segal_discrete(x, 4), name + ": Segal maps");
    auto ho = homotopy_category(x);
    const auto& h = ho.category;
    bool valid = true;
    try {
      h.validate();
    } catch (const std::exception&) {
      valid = false;
    }
    t.check(valid, name + ": Ho is a category");
    bool assoc = true;
    for (int f = 0; valid && f < static_cast<int>(h.size()); ++f)
      for (int g = 0; g < static_cast<int>(h.size()); ++g) {
        int gf = h.comp(g, f);
        if (gf < 0) continue;
        for (int k = 0; k < static_cast<int>(h.size()); ++k) {
          int kg = h.comp(k, g);
          if (kg < 0) continue;
          if (h.comp(k, gf) != h.comp(kg, f)) assoc = false;
        }
      }
    t.check(assoc, name + ": associativity");
    t.check(find_cat_isomorphism(h, c).has_value(), name + ": Ho(N C) = C");
  }
  Json j = t.json();
  j["passed"] = t.passed();
  return j;
}

bool has_non_identity(const FinCat& c) {
  for (int f = 0; f < static_cast<int>(c.size()); ++f)
    if (!c.is_identity(f)) return true;
  return false;
}

Json c8_complete(const Corpus& corpus) {
  Tally t;
  std::size_t posets = 0, groupoids = 0;
  for (auto& [name, c] : corpus.categories) {
    auto x = disc_nerve(c, nerve_truncation(c, 4));
    auto comp = is_complete_discrete(x);
    if (is_poset(c)) {
      ++posets;
      t.check(comp.complete, name + ": poset nerve complete");
    }
    if (is_groupoid(c) && has_non_identity(c)) {
      ++groupoids;
      t.check(!comp.complete, name + ": groupoid nerve not complete");
    }
    t.check(prime_components(x).matches, name + ": d12 of X'_3 = X_heq");
  }
  Json j = t.json();
  j["posets"] = posets;
  j["groupoids"] = groupoids;
  j["passed"] = t.passed();
  return j;
}

Json c9_yoneda(const Corpus& corpus) {
  Tally eval, ff;
  for (auto& [name, file] : corpus.functors) {
    auto e = elements(file.category, file.functor, nerve_truncation(file.category, 4));
    for (int x = 0; x < static_cast<int>(file.category.objects.size()); ++x) {
      auto r = evaluation_check(e, x, 3);
      eval.check(r.bijective(), name + " at " + file.category.objects[static_cast<std::size_t>(x)]);
    }
  }
  for (auto& [name, c] : corpus.categories) {
    auto r = fully_faithful_yoneda_check(c, nerve_truncation(c, 3));
    ff.check(r.ok(), name);
  }
  Json j{{"evaluation", eval.json()}, {"fully_faithful", ff.json()}};
  j["passed"] = eval.passed() && ff.passed();
  return j;
}

Json c10_skeleton(const Corpus& corpus) {
  Tally t;
  for (auto& [name, x] : corpus.bisets)
    for (int n = 0; n <= 3; ++n) {
      auto s = skeleton_pushout(x, n);
      t.check(s.isomorphism, name + " n=" + std::to_string(n));
    }
  Json j = t.json();
  j["passed"] = t.passed();
  return j;
}

Json c11_homology() {
  Tally t;
  Json groups = Json::array();
  for (int n = 2; n <= 3; ++n) {
    auto h = homology_upto(*boundary(n), n);
    for (int d = 0; d <= n; ++d) {
      HomologyGroup want;
      want.betti = (d == 0 || d == n - 1) ? 1 : 0;
      t.check(h[static_cast<std::size_t>(d)] == want, "H_" + std::to_string(d) + " of the boundary of D" + std::to_string(n));
      groups.push_back({n, d, h[static_cast<std::size_t>(d)].to_string()});
    }
  }
  auto incl = we_necessary(standard_inclusion(boundary(2), 2), 2);
  t.check(incl.verdict == WeVerdict::RefutedWE, "boundary inclusion refuted");
  auto collapse = we_necessary(to_point<1>(boundary(2)), 2);
  t.check(collapse.verdict == WeVerdict::RefutedWE, "collapse to a point refuted");
  auto id = we_necessary(SSetMap::identity(boundary(2)), 2);
  t.check(id.verdict == WeVerdict::Consistent, "identity consistent");
  Json j = t.json();
  j["groups"] = groups;
  j["inclusion"] = incl.reason;
  j["collapse"] = collapse.reason;
  j["passed"] = t.passed();
  return j;
}

struct CriterionSpec {
  const char* name;
  const char* anchor;
  std::string tier;
  double limit;
  std::function<Json(const Corpus&)> run;
};

const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> specs = {
      {"ordinal algebra", "ordinal.identities", kExactTier, 5, [](const Corpus&) { return c1_ordinal(); }},
      {"counting oracle", "standard.yoneda-count", kExactTier, 10, [](const Corpus&) { return c2_counting(); }},
      {"prism decompositions", "left.prism", kExactTier, 30, [](const Corpus&) { return c3_prisms(); }},
      {"retract witness", "left.retract", kExactTier, 1, [](const Corpus&) { return c4_retract(); }},
      {"cylinder fiber formula", "cylinder.fiber-formula", bounded_tier(3), 60, c5_cylinder},
      {"left fibration routes", "fibration.left-levelwise", bounded_tier(3), 120, c6_left},
      {"Segal and homotopy category", "segal.homotopy-category", bounded_tier(4), 30, c7_segal},
      {"completeness discriminator", "complete.discrete", bounded_tier(4), 30, c8_complete},
      {"discrete Yoneda", "yoneda.fully-faithful", bounded_tier(4), 60, c9_yoneda},
      {"skeleton pushout", "skeleton.pushout", bounded_tier(3), 30, c10_skeleton},
      {"homology sanity", "homology.spheres", bounded_tier(2), 10, [](const Corpus&) { return c11_homology(); }},
  };
  return specs;
}

}  // namespace

std::size_t Corpus::size() const {
  return categories.size() + functors.size() + bisets.size() + chains.size() + maps.size();
}

std::optional<int> nerve_truncation(const FinCat& c, int dim) {
  if (c.chain_bound()) return std::nullopt;
  return dim;
}

bool is_poset(const FinCat& c) {
  const int n = static_cast<int>(c.objects.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto h = c.hom(x, y).size();
      if (h > 1) return false;
      if (x != y && h == 1 && !c.hom(y, x).empty()) return false;
    }
  return true;
}

bool is_groupoid(const FinCat& c) {
  for (int f = 0; f < static_cast<int>(c.size()); ++f)
    if (!c.is_invertible(f)) return false;
  return true;
}

Corpus default_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corpus c;
  c.categories = {{"ord0", ordinal_category(0)},
                  {"ord1", ordinal_category(1)},
                  {"ord2", ordinal_category(2)},
                  {"ord3", ordinal_category(3)},
                  {"poset_v", poset(3, {{0, 1}, {0, 2}})},
                  {"poset_lambda", poset(3, {{0, 2}, {1, 2}})},
                  {"poset_random_a", random_poset(rng)},
                  {"poset_random_b", random_poset(rng)},
                  {"discrete2", discrete_category(2)},
                  {"parallel", parallel_pair()},
                  {"idempotent", named_category("idempotent")},
                  {"z2", cyclic_group(2)},
                  {"z3", cyclic_group(3)},
                  {"groupoid_2_1", connected_groupoid(2, 1)},
                  {"groupoid_2_2", connected_groupoid(2, 2)}};

  for (auto& [name, cat] : c.categories) {
    for (int x = 0; x < static_cast<int>(cat.objects.size()); ++x)
      c.functors.push_back({"rep_" + name + "_" + std::to_string(x), {cat, representable(cat, x)}});
    c.functors.push_back({"point_" + name, {cat, constant_singleton(cat)}});
  }
  for (const char* name : {"ord1", "ord2", "ord3"}) {
    auto it = std::find_if(c.categories.begin(), c.categories.end(), [&](auto& e) { return e.first == name; });
    for (int k = 0; k < 2; ++k)
      c.functors.push_back({std::string("random_") + name + "_" + std::to_string(k), {it->second, random_chain_functor(it->second, rng)}});
  }
  auto z2 = cyclic_group(2);
  for (int k = 0; k < 2; ++k) c.functors.push_back({"random_z2_" + std::to_string(k), {z2, random_involution(z2, rng)}});

  c.bisets = {{"box_1_1", box(1, 1)},
              {"box_2_1", box(2, 1)},
              {"boundary_box_1_1", boundary_box(1, 1)},
              {"boundary_box_2_1", boundary_box(2, 1)},
              {"F3", F(3)},
              {"dF2", dF(2)},
              {"horn_2_0", Fhorn(2, 0)},
              {"horn_2_1", Fhorn(2, 1)},
              {"disc_boundary2", disc(boundary(2))},
              {"constant_delta1", constant(standard(1))},
              {"constant_horn_2_1", constant(horn(2, 1))},
              {"nerve_ord2", disc_nerve(ordinal_category(2))},
              {"nerve_z2", disc_nerve(cyclic_group(2), 3)}};
  for (int k = 0; k < 3; ++k) c.bisets.push_back({"random_sub_box_" + std::to_string(k), random_sub_box(rng, 1 + k % 2, 1)});

  for (std::size_t i = 0; i < 54; ++i) c.chains.push_back({numbered("random_", i), random_chain(rng, static_cast<int>(i % 3))});

  for (std::size_t i = 0; c.maps.size() < 110 && i < 5000; ++i) {
    auto x = random_small(rng);
    auto y = random_small(rng);
    auto maps = hom_enum<2>(x, y);
    if (maps.empty()) continue;
    c.maps.push_back({numbered("random_", c.maps.size()), maps[rng() % maps.size()]});
  }
  return c;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (auto& [name, c] : corpus.categories) write_json_file(dir / ("fincat_" + name + ".json"), fincat_to_json(c));
  for (auto& [name, f] : corpus.functors)
    write_json_file(dir / ("functor_" + name + ".json"), functor_to_json(f.category, f.functor));
  for (auto& [name, x] : corpus.bisets) write_json_file(dir / ("bisset_" + name + ".json"), cellset_to_json<2>(*x));
  for (auto& [name, ch] : corpus.chains) write_json_file(dir / ("chain_" + name + ".json"), chain_to_json(ch));
  for (auto& [name, f] : corpus.maps) write_json_file(dir / ("map_" + name + ".json"), map_to_json<2>(f));
}

Corpus load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Corpus c;
  for (auto& path : files) {
    const std::string stem = path.stem().string();
    const std::string name = stem.substr(stem.find('_') == std::string::npos ? 0 : stem.find('_') + 1);
    try {
      Json j = read_json_file(path);
      const std::string kind = kind_of(j);
      if (kind == "fincat") {
        c.categories.push_back({name, fincat_from_json(j)});
      } else if (kind == "functor") {
        c.functors.push_back({name, functor_from_json(j)});
      } else if (kind == "bisset") {
        c.bisets.push_back({name, cellset_from_json<2>(j)});
      } else if (kind == "chain") {
        c.chains.push_back({name, chain_from_json(j)});
      } else if (kind == "map") {
        c.maps.push_back({name, map_from_json<2>(j)});
      } else {
        throw ParseError("unsupported corpus kind \"" + kind + "\"");
      }
    } catch (const ParseError& e) {
      const std::string what = e.what();
      if (what.rfind(path.string(), 0) == 0) throw;
      throw ParseError(path.string() + ": " + what);
    }
  }
  return c;
}

Corpus ensure_corpus(const std::filesystem::path& dir, std::uint64_t seed) {
  bool empty = !std::filesystem::exists(dir) || std::filesystem::is_empty(dir);
  if (empty) write_corpus(default_corpus(seed), dir);
  return load_corpus(dir);
}

CriterionResult run_criterion(int id, const Corpus& corpus) {
  if (id < 1 || id > kSuiteCriteria) throw RangeError("criterion id out of range");
  const auto& entry = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = entry.name;
  r.anchor = entry.anchor;
  r.tier = entry.tier;
  r.limit_seconds = entry.limit;
  auto start = std::chrono::steady_clock::now();
  try {
    r.detail = entry.run(corpus);
    r.passed = r.detail.value("passed", false);
  } catch (const InvariantViolation& e) {
    r.detail = Json{{"error", e.what()}};
    r.passed = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_suite(const Corpus& corpus) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kSuiteCriteria; ++id) out.push_back(run_criterion(id, corpus));
  return out;
}

Json suite_json(const std::vector<CriterionResult>& results, std::uint64_t seed) {
  Json list = Json::array();
  bool all = true;
  for (auto& r : results) {
    if (!is_registered_anchor(r.anchor)) throw InvariantViolation("criterion cites unregistered anchor " + r.anchor);
    list.push_back(Json{{"id", r.id}, {"name", r.name}, {"anchor", r.anchor}, {"tier", r.tier}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return Json{{"seed", seed}, {"criteria", std::move(list)}, {"passed", all}};
}

}  // namespace segalkit
