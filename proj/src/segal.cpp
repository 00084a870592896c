#include "segalkit/segal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "segalkit/sset.hpp"

namespace segalkit {

int FinCat::comp(int g, int f) const {
  return composition[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
}

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (std::size_t f = 0; f < arrows.size(); ++f)
    if (arrows[f].source == x && arrows[f].target == y) out.push_back(static_cast<int>(f));
  return out;
}

bool FinCat::is_invertible(int f) const {
  const auto& a = arrows[static_cast<std::size_t>(f)];
  for (int g : hom(a.target, a.source))
    if (comp(g, f) == identity[static_cast<std::size_t>(a.source)] &&
        comp(f, g) == identity[static_cast<std::size_t>(a.target)])
      return true;
  return false;
}

void FinCat::validate() const {
  const int nobj = static_cast<int>(objects.size());
  const int narr = static_cast<int>(arrows.size());
  auto fail = [](const std::string& m) { throw std::invalid_argument("category: " + m); };
  if (identity.size() != objects.size()) fail("one identity per object required");
  if (composition.size() != arrows.size()) fail("composition table has wrong size");
  std::set<std::string> names;
  for (auto& a : arrows) {
    if (a.source < 0 || a.source >= nobj || a.target < 0 || a.target >= nobj) fail("arrow endpoint out of range");
    if (!names.insert(a.name).second) fail("duplicate arrow name " + a.name);
  }
  for (int x = 0; x < nobj; ++x) {
    int i = identity[static_cast<std::size_t>(x)];
    if (i < 0 || i >= narr) fail("identity out of range");
    if (arrows[static_cast<std::size_t>(i)].source != x || arrows[static_cast<std::size_t>(i)].target != x)
      fail("identity of " + objects[static_cast<std::size_t>(x)] + " is not an endomorphism");
  }
  for (int g = 0; g < narr; ++g) {
    if (composition[static_cast<std::size_t>(g)].size() != arrows.size()) fail("composition table has wrong size");
    for (int f = 0; f < narr; ++f) {
      const auto& af = arrows[static_cast<std::size_t>(f)];
      const auto& ag = arrows[static_cast<std::size_t>(g)];
      int h = comp(g, f);
      if (af.target != ag.source) {
        if (h != -1) fail("composite defined for non-composable pair");
        continue;
      }
      if (h < 0 || h >= narr) fail(ag.name + " o " + af.name + " undefined");
      const auto& ah = arrows[static_cast<std::size_t>(h)];
      if (ah.source != af.source || ah.target != ag.target) fail(ag.name + " o " + af.name + " has wrong endpoints");
    }
  }
  for (int f = 0; f < narr; ++f) {
    const auto& af = arrows[static_cast<std::size_t>(f)];
    if (comp(f, identity[static_cast<std::size_t>(af.source)]) != f ||
        comp(identity[static_cast<std::size_t>(af.target)], f) != f)
      fail("identity law fails at " + af.name);
  }
  for (int f = 0; f < narr; ++f)
    for (int g = 0; g < narr; ++g) {
      int gf = comp(g, f);
      if (gf < 0) continue;
      for (int h = 0; h < narr; ++h) {
        int hg = comp(h, g);
        if (hg < 0) continue;
        if (comp(h, gf) != comp(hg, f)) fail("associativity fails");
      }
    }
}

std::optional<int> FinCat::chain_bound() const {
  const std::size_t n = objects.size();
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    if (is_identity(static_cast<int>(f))) continue;
    const auto& a = arrows[f];
    if (a.source == a.target) return std::nullopt;
    edge[static_cast<std::size_t>(a.source)][static_cast<std::size_t>(a.target)] = true;
  }
  // Longest path by memoized search; a revisit on the stack is a cycle.
  std::vector<int> longest(n, -1), state(n, 0);
  bool cyclic = false;
  std::function<int(std::size_t)> visit = [&](std::size_t x) -> int {
    if (state[x] == 1) {
      cyclic = true;
      return 0;
    }
    if (state[x] == 2) return longest[x];
    state[x] = 1;
    int best = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (edge[x][y]) best = std::max(best, 1 + visit(y));
    state[x] = 2;
    return longest[x] = best;
  };
  int best = 0;
  for (std::size_t x = 0; x < n; ++x) best = std::max(best, visit(x));
  if (cyclic) return std::nullopt;
  return best;
}

FinCat make_category(std::vector<std::string> objects, std::vector<FinCat::Arrow> arrows, std::vector<int> identity,
                     std::vector<std::vector<int>> composition) {
  FinCat c{std::move(objects), std::move(arrows), std::move(identity), std::move(composition)};
  c.validate();
  return c;
}

namespace {

FinCat from_rule(std::vector<std::string> objects, std::vector<FinCat::Arrow> arrows, std::vector<int> identity,
                 const std::function<int(int, int)>& rule) {
  std::vector<std::vector<int>> table(arrows.size(), std::vector<int>(arrows.size(), -1));
  for (std::size_t g = 0; g < arrows.size(); ++g)
    for (std::size_t f = 0; f < arrows.size(); ++f)
      if (arrows[f].target == arrows[g].source) table[g][f] = rule(static_cast<int>(g), static_cast<int>(f));
  return make_category(std::move(objects), std::move(arrows), std::move(identity), std::move(table));
}

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

FinCat poset(int n, const std::vector<std::pair<int, int>>& less) {
  if (n < 0) throw RangeError("poset: negative size");
  std::vector<std::vector<bool>> le(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw RangeError("poset: element out of range");
    le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      if (i != j && le[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw std::invalid_argument("poset: relations are not antisymmetric");
      index[{i, j}] = static_cast<int>(arrows.size());
      if (i == j) identity[static_cast<std::size_t>(i)] = static_cast<int>(arrows.size());
      arrows.push_back({i == j ? "id" + std::to_string(i) : std::to_string(i) + "<" + std::to_string(j), i, j});
    }
  auto arrows_copy = arrows;
  return from_rule(numbered(n), std::move(arrows), std::move(identity), [&](int g, int f) {
    return index.at({arrows_copy[static_cast<std::size_t>(f)].source, arrows_copy[static_cast<std::size_t>(g)].target});
  });
}

FinCat ordinal_category(int n) {
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < n; ++i) less.emplace_back(i, i + 1);
  return poset(n + 1, less);
}

FinCat cyclic_group(int k) {
  if (k < 1) throw RangeError("cyclic_group: order must be positive");
  std::vector<FinCat::Arrow> arrows;
  for (int i = 0; i < k; ++i) arrows.push_back({i == 0 ? "e" : "g" + std::to_string(i), 0, 0});
  return from_rule({"*"}, std::move(arrows), {0}, [k](int g, int f) { return (g + f) % k; });
}

FinCat discrete_category(int k) {
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> identity;
  for (int i = 0; i < k; ++i) {
    identity.push_back(i);
    arrows.push_back({"id" + std::to_string(i), i, i});
  }
  return from_rule(numbered(k), std::move(arrows), std::move(identity), [](int, int f) { return f; });
}

FinCat parallel_pair() {
  std::vector<FinCat::Arrow> arrows{{"id0", 0, 0}, {"id1", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
  return from_rule(numbered(2), std::move(arrows), {0, 1}, [](int g, int f) { return g <= 1 ? f : g; });
}

FinCat connected_groupoid(int k, int g) {
  if (k < 1 || g < 1) throw RangeError("connected_groupoid: sizes must be positive");
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> identity(static_cast<std::size_t>(k));
  struct Code {
    int x, y, e;
  };
  std::vector<Code> code;
  std::map<std::tuple<int, int, int>, int> index;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int e = 0; e < g; ++e) {
        int id = static_cast<int>(arrows.size());
        if (x == y && e == 0) identity[static_cast<std::size_t>(x)] = id;
        arrows.push_back({std::to_string(x) + ">" + std::to_string(y) + (g > 1 ? "^" + std::to_string(e) : ""), x, y});
        code.push_back({x, y, e});
        index[{x, y, e}] = id;
      }
  return from_rule(numbered(k), std::move(arrows), std::move(identity), [&, g](int b, int a) {
    const auto& ca = code[static_cast<std::size_t>(a)];
    const auto& cb = code[static_cast<std::size_t>(b)];
    return index.at({ca.x, cb.y, (ca.e + cb.e) % g});
  });
}

std::optional<CatIso> find_cat_isomorphism(const FinCat& c, const FinCat& d) {
  if (c.objects.size() != d.objects.size() || c.arrows.size() != d.arrows.size()) return std::nullopt;
  const int nobj = static_cast<int>(c.objects.size());
  const int narr = static_cast<int>(c.arrows.size());
  std::vector<int> perm(static_cast<std::size_t>(nobj));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool sizes = true;
    for (int x = 0; x < nobj && sizes; ++x)
      for (int y = 0; y < nobj && sizes; ++y)
        if (c.hom(x, y).size() != d.hom(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]).size())
          sizes = false;
    if (!sizes) continue;
    std::vector<int> on(static_cast<std::size_t>(narr), -1);
    std::vector<bool> used(static_cast<std::size_t>(narr), false);
    std::function<bool(int)> rec = [&](int f) -> bool {
      if (f == narr) return true;
      const auto& a = c.arrows[static_cast<std::size_t>(f)];
      for (int t : d.hom(perm[static_cast<std::size_t>(a.source)], perm[static_cast<std::size_t>(a.target)])) {
        if (used[static_cast<std::size_t>(t)]) continue;
        if (c.is_identity(f) != d.is_identity(t)) continue;
        on[static_cast<std::size_t>(f)] = t;
        bool ok = true;
        for (int g = 0; g <= f && ok; ++g) {
          for (auto [x, y] : {std::pair{g, f}, std::pair{f, g}}) {
            int xy = c.comp(x, y);
            if (xy < 0 || xy > f) continue;
            if (d.comp(on[static_cast<std::size_t>(x)], on[static_cast<std::size_t>(y)]) != on[static_cast<std::size_t>(xy)]) ok = false;
          }
        }
        if (ok) {
          used[static_cast<std::size_t>(t)] = true;
          if (rec(f + 1)) return true;
          used[static_cast<std::size_t>(t)] = false;
        }
        on[static_cast<std::size_t>(f)] = -1;
      }
      return false;
    };
    if (rec(0)) return CatIso{perm, on};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Simplex Nerve::simplex_of(int level, const LevelKey& chain_key) const {
  return normalized.lookup({level}, chain_key);
}

std::vector<LevelKey> chains(const FinCat& c, int n) {
  std::vector<LevelKey> out;
  if (n == 0) {
    for (std::size_t x = 0; x < c.objects.size(); ++x) out.push_back({static_cast<std::int64_t>(x)});
    return out;
  }
  LevelKey chain;
  std::function<void(int)> rec = [&](int at) {
    if (static_cast<int>(chain.size()) == n) {
      out.push_back(chain);
      check_budget(out.size(), "nerve level");
      return;
    }
    for (std::size_t f = 0; f < c.arrows.size(); ++f) {
      if (!chain.empty() && c.arrows[f].source != at) continue;
      chain.push_back(static_cast<std::int64_t>(f));
      rec(c.arrows[f].target);
      chain.pop_back();
    }
  };
  rec(-1);
  return out;
}

std::vector<int> chain_objects(const FinCat& c, int n, const LevelKey& chain) {
  if (n == 0) return {static_cast<int>(chain[0])};
  std::vector<int> v{c.arrows[static_cast<std::size_t>(chain[0])].source};
  for (auto f : chain) v.push_back(c.arrows[static_cast<std::size_t>(f)].target);
  return v;
}

int chain_composite(const FinCat& c, int n, const LevelKey& chain, int i, int j) {
  auto v = chain_objects(c, n, chain);
  int f = c.identity[static_cast<std::size_t>(v[static_cast<std::size_t>(i)])];
  for (int k = i + 1; k <= j; ++k) f = c.comp(static_cast<int>(chain[static_cast<std::size_t>(k - 1)]), f);
  return f;
}

LevelKey chain_act(const FinCat& c, const OrdinalMap& tau, const LevelKey& chain) {
  if (tau.dom() == 0) return {chain_objects(c, tau.cod(), chain)[static_cast<std::size_t>(tau(0))]};
  LevelKey out;
  for (int i = 1; i <= tau.dom(); ++i) out.push_back(chain_composite(c, tau.cod(), chain, tau(i - 1), tau(i)));
  return out;
}

Nerve nerve(const FinCat& c, std::optional<int> max_dim) {
  c.validate();
  auto bound = c.chain_bound();
  int top;
  if (max_dim) {
    top = *max_dim;
  } else if (bound) {
    top = *bound;
  } else {
    throw std::invalid_argument("nerve: chains are unbounded; a truncation dimension is required");
  }
  LevelOracle<1> oracle;
  oracle.elements = [&c](const Degree<1>& d) { return chains(c, d[0]); };
  oracle.act = [&c](const MultiOrdinal<1>& tau, const LevelKey& key) { return chain_act(c, tau[0], key); };
  oracle.label = [&c](const Degree<1>& d, const LevelKey& key) {
    if (d[0] == 0) return c.objects[static_cast<std::size_t>(key[0])];
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "|" : "") + c.arrows[static_cast<std::size_t>(key[i])].name;
    return s;
  };
  Nerve n;
  n.normalized = normalize<1>(oracle, {top}, top);
  n.object = n.normalized.object;
  n.chain = n.normalized.generator_key;
  return n;
}

BiSet disc_nerve(const FinCat& c, std::optional<int> max_dim) { return disc(nerve(c, max_dim).object); }

void validate_functor(const FinCat& c, const FinCat& d, const Functor& f) {
  auto fail = [](const std::string& m) { throw std::invalid_argument("functor: " + m); };
  if (f.on_objects.size() != c.objects.size() || f.on_arrows.size() != c.arrows.size()) fail("wrong table sizes");
  for (int x : f.on_objects)
    if (x < 0 || x >= static_cast<int>(d.objects.size())) fail("object out of range");
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    int t = f.on_arrows[a];
    if (t < 0 || t >= static_cast<int>(d.arrows.size())) fail("arrow out of range");
    const auto& ca = c.arrows[a];
    const auto& da = d.arrows[static_cast<std::size_t>(t)];
    if (da.source != f.on_objects[static_cast<std::size_t>(ca.source)] ||
        da.target != f.on_objects[static_cast<std::size_t>(ca.target)])
      fail("endpoints not preserved at " + ca.name);
  }
  for (std::size_t x = 0; x < c.objects.size(); ++x)
    if (f.on_arrows[static_cast<std::size_t>(c.identity[x])] != d.identity[static_cast<std::size_t>(f.on_objects[x])])
      fail("identity not preserved");
  for (std::size_t g = 0; g < c.arrows.size(); ++g)
    for (std::size_t a = 0; a < c.arrows.size(); ++a) {
      int gf = c.comp(static_cast<int>(g), static_cast<int>(a));
      if (gf < 0) continue;
      if (d.comp(f.on_arrows[g], f.on_arrows[a]) != f.on_arrows[static_cast<std::size_t>(gf)]) fail("composition not preserved");
    }
}

SSetMap nerve_map(const Nerve& nc, const Nerve& nd, const FinCat& c, const FinCat& d, const Functor& f) {
  validate_functor(c, d, f);
  std::vector<Simplex> a;
  for (std::uint32_t g = 0; g < nc.object->size(); ++g) {
    const int level = nc.object->generator(g).degree[0];
    LevelKey key;
    if (level == 0) {
      key.push_back(f.on_objects[static_cast<std::size_t>(nc.chain[g][0])]);
    } else {
      for (auto arrow : nc.chain[g]) key.push_back(f.on_arrows[static_cast<std::size_t>(arrow)]);
    }
    a.push_back(nd.simplex_of(level, key));
  }
  return SSetMap(nc.object, nd.object, std::move(a));
}

// ---------------------------------------------------------------------------

VirtualSSet::VirtualSSet(Elements elements, Action act) : elements_(std::move(elements)), act_(std::move(act)) {}

const std::vector<LevelKey>& VirtualSSet::level(int n) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  std::vector<std::set<LevelKey>> lower;
  for (int j = 0; j < n; ++j) {
    const auto& l = level(j);
    lower.emplace_back(l.begin(), l.end());
  }
  auto elems = elements_(n);
  std::set<LevelKey> here(elems.begin(), elems.end());
  for (auto& e : elems) {
    if (act_(OrdinalMap::identity(n), e) != e) throw InvariantViolation("virtual level: identity acts non-trivially");
    for (int j = 0; j <= n; ++j)
      for (auto& sigma : enumerate_maps(j, n)) {
        LevelKey se = act_(sigma, e);
        const auto& target = j == n ? here : lower[static_cast<std::size_t>(j)];
        if (!target.count(se)) throw InvariantViolation("virtual level: action leaves the level set");
        for (int k = 0; k <= j; ++k)
          for (auto& tau : enumerate_maps(k, j))
            if (act_(compose(sigma, tau), e) != act_(tau, se))
              throw InvariantViolation("virtual level: action is not functorial");
      }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(n, std::move(elems)).first->second;
}

LevelKey VirtualSSet::act(const OrdinalMap& tau, const LevelKey& e) const { return act_(tau, e); }

int VirtualSSet::levels_cached() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return static_cast<int>(cache_.size());
}

VirtualSSet map_space(const SSet& y, const SSet& x) {
  // A map Y x Delta[n] -> X is recorded by its values on all pairs (c, s)
  // with c a cell of Y and s a simplex of Delta[n] of the same degree.
  const int top = y->empty() ? 0 : y->dimension()[0];
  auto encode = [y, x, top](int n, const std::function<Simplex(const Simplex&, const OrdinalMap&)>& value) {
    LevelKey key;
    for (int d = 0; d <= top + n; ++d)
      for (auto& c : y->cells({d}))
        for (auto& s : enumerate_maps(d, n)) key.push_back(static_cast<std::int64_t>(*x->cell_index(value(c, s))));
    return key;
  };
  auto decode_at = [y, top](int n, const LevelKey& key, const Simplex& c, const OrdinalMap& s) {
    std::size_t pos = 0;
    for (int d = 0; d <= top + n; ++d) {
      auto maps = enumerate_maps(d, n);
      const auto& cells = y->cells({d});
      if (d == c.degree()[0]) {
        auto ci = static_cast<std::size_t>(std::find(cells.begin(), cells.end(), c) - cells.begin());
        auto si = static_cast<std::size_t>(std::find(maps.begin(), maps.end(), s) - maps.begin());
        return key[pos + ci * maps.size() + si];
      }
      pos += cells.size() * maps.size();
    }
    throw RangeError("map space: degree out of range");
  };
  auto elements = [y, x, encode](int n) {
    std::vector<LevelKey> out;
    auto delta = standard(n);
    Product<1> prod(y, delta);
    for (auto& f : hom_enum<1>(prod.object(), x)) {
      out.push_back(encode(n, [&](const Simplex& c, const OrdinalMap& s) {
        return f.image(prod.pair(c, standard_simplex(*delta, n, s)));
      }));
      check_budget(out.size(), "map space level");
    }
    return out;
  };
  auto act = [x, encode, decode_at](const OrdinalMap& tau, const LevelKey& key) {
    const int n = tau.cod();
    return encode(tau.dom(), [&](const Simplex& c, const OrdinalMap& s) {
      return x->cells(c.degree())[static_cast<std::size_t>(decode_at(n, key, c, compose(tau, s)))];
    });
  };
  return VirtualSSet(elements, act);
}

// ---------------------------------------------------------------------------

SegalMap segal_map(const BiSet& x, int n) {
  if (n < 2) throw RangeError("segal_map: n must be at least 2");
  SegalMap s;
  s.row_n = std::make_shared<Slice>(row(x, n));
  s.row_1 = std::make_shared<Slice>(row(x, 1));
  s.row_0 = std::make_shared<Slice>(row(x, 0));
  auto source_of = slice_map(*s.row_1, *s.row_0, OrdinalMap(1, {0}));
  auto target_of = slice_map(*s.row_1, *s.row_0, OrdinalMap(1, {1}));
  auto edge = [&](int j) { return slice_map(*s.row_n, *s.row_1, OrdinalMap(n, {j - 1, j})); };
  SSetMap phi = edge(1);
  SSetMap end = target_of;
  for (int j = 2; j <= n; ++j) {
    auto pb = std::make_shared<Product<1>>(pullback<1>(end, source_of));
    phi = pb->pairing(phi, edge(j));
    end = compose(target_of, pb->second());
    s.stages.push_back(pb);
  }
  s.map = phi;
  return s;
}

namespace {

void require_discrete(const BiSet& x, const char* what) {
  if (!x->is_discrete_in_last_axis()) throw std::invalid_argument(std::string(what) + ": input is not discrete");
}

std::size_t position(const std::vector<BiCell>& cells, const BiCell& c) {
  return static_cast<std::size_t>(std::find(cells.begin(), cells.end(), c) - cells.begin());
}

BiCell apply_first(const FinBiSet& x, const OrdinalMap& tau, const BiCell& c) {
  return x.apply({tau, OrdinalMap::identity(c.degree()[1])}, c);
}

void require_segal(const BiSet& x, int bound, const char* what) {
  if (!check_segal_discrete(x, bound)) throw std::invalid_argument(std::string(what) + ": Segal check fails");
}

}  // namespace

bool check_segal_discrete(const BiSet& x, int bound) {
  require_discrete(x, "check_segal_discrete");
  for (int n = 2; n <= bound; ++n)
    if (!is_isomorphism(segal_map(x, n).map)) return false;
  return true;
}

std::vector<BiCell> objects_of(const FinBiSet& x) { return x.cells({0, 0}); }

std::vector<BiCell> mapping_set(const FinBiSet& x, std::uint32_t from, std::uint32_t to) {
  auto check = [&](std::uint32_t v) {
    if (v >= x.size() || x.generator(v).degree != Degree<2>{0, 0}) throw std::invalid_argument("mapping_set: not a vertex");
  };
  check(from);
  check(to);
  std::vector<BiCell> out;
  for (auto& c : x.cells({1, 0}))
    if (x.vertex(c, {0, 0}).gen == from && x.vertex(c, {1, 0}).gen == to) out.push_back(c);
  return out;
}

BiCell identity_elt(const FinBiSet& x, std::uint32_t object) {
  if (object >= x.size() || x.generator(object).degree != Degree<2>{0, 0})
    throw std::invalid_argument("identity_elt: not a vertex");
  return x.degen(x.generator_cell(object), 0, 0);
}

HomotopyCategory homotopy_category(const BiSet& x) {
  require_segal(x, 3, "homotopy_category");
  HomotopyCategory ho;
  const auto& verts = x->cells({0, 0});
  const auto& edges = x->cells({1, 0});
  std::vector<int> object_of(x->size(), -1);
  for (auto& v : verts) {
    object_of[v.gen] = static_cast<int>(ho.vertex.size());
    ho.vertex.push_back(v.gen);
    ho.category.objects.push_back(x->generator(v.gen).label);
  }
  for (auto& e : edges) {
    ho.edge.push_back(e);
    ho.category.arrows.push_back({x->cell_label(e), object_of[x->vertex(e, {0, 0}).gen], object_of[x->vertex(e, {1, 0}).gen]});
  }
  for (auto v : ho.vertex) ho.category.identity.push_back(static_cast<int>(position(edges, identity_elt(*x, v))));
  // The section of phi_2: the unique 2-cell with given 01 and 12 edges.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composite;
  for (auto& s : x->cells({2, 0})) {
    auto a = position(edges, apply_first(*x, OrdinalMap(2, {0, 1}), s));
    auto b = position(edges, apply_first(*x, OrdinalMap(2, {1, 2}), s));
    auto ab = position(edges, apply_first(*x, OrdinalMap(2, {0, 2}), s));
    if (!composite.emplace(std::pair{a, b}, ab).second) throw InvariantViolation("homotopy_category: phi_2 not injective");
  }
  const std::size_t n = edges.size();
  ho.category.composition.assign(n, std::vector<int>(n, -1));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (ho.category.arrows[f].target != ho.category.arrows[g].source) continue;
      auto it = composite.find({f, g});
      if (it == composite.end()) throw InvariantViolation("homotopy_category: phi_2 not surjective");
      ho.category.composition[g][f] = static_cast<int>(it->second);
    }
  try {
    ho.category.validate();
  } catch (const std::invalid_argument& e) {
    throw InvariantViolation(std::string("homotopy_category: ") + e.what());
  }
  return ho;
}

std::vector<BiCell> heq_subset(const BiSet& x) {
  auto ho = homotopy_category(x);
  std::vector<BiCell> out;
  for (std::size_t f = 0; f < ho.edge.size(); ++f)
    if (ho.category.is_invertible(static_cast<int>(f))) out.push_back(ho.edge[f]);
  return out;
}

Completeness is_complete_discrete(const BiSet& x) {
  Completeness c;
  c.heq = heq_subset(x).size();
  c.objects = x->cells({0, 0}).size();
  c.complete = c.heq == c.objects;
  return c;
}

bool fully_faithful_discrete(const BiMap& f) {
  require_segal(f.source_ptr(), 2, "fully_faithful_discrete");
  require_segal(f.target_ptr(), 2, "fully_faithful_discrete");
  const auto& x = f.source();
  const auto& y = f.target();
  for (auto& a : x.cells({0, 0}))
    for (auto& b : x.cells({0, 0})) {
      auto homs = mapping_set(x, a.gen, b.gen);
      auto target = mapping_set(y, f.image(a).gen, f.image(b).gen);
      if (homs.size() != target.size()) return false;
      std::set<std::size_t> hit;
      for (auto& e : homs) hit.insert(position(target, f.image(e)));
      if (hit.size() != homs.size()) return false;
    }
  return true;
}

PrimeComponents prime_components(const BiSet& x) {
  PrimeComponents out;
  out.heq = heq_subset(x);
  const auto& edges = x->cells({1, 0});
  Slice r1 = row(x, 1);
  auto comps = pi0(*r1.object());
  std::set<int> meets;
  for (auto& v : x->cells({0, 0})) meets.insert(comps.of(r1.simplex_of(identity_elt(*x, v.gen)).gen));
  std::set<std::size_t> in_x1;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (meets.count(comps.of(r1.simplex_of(edges[i]).gen))) {
      in_x1.insert(i);
      out.x1.push_back(edges[i]);
    }
  std::set<std::size_t> d12;
  for (auto& s : x->cells({3, 0})) {
    auto e02 = position(edges, apply_first(*x, OrdinalMap(3, {0, 2}), s));
    auto e13 = position(edges, apply_first(*x, OrdinalMap(3, {1, 3}), s));
    if (!in_x1.count(e02) || !in_x1.count(e13)) continue;
    out.x3.push_back(s);
    d12.insert(position(edges, apply_first(*x, OrdinalMap(3, {1, 2}), s)));
  }
  for (auto i : d12) out.d12.push_back(edges[i]);
  out.matches = out.d12 == out.heq;
  return out;
}

}  // namespace segalkit
