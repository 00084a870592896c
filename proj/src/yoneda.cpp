#include "segalkit/yoneda.hpp"

#include <set>

#include "segalkit/sset.hpp"

namespace segalkit {

namespace {

std::int64_t index_in(const FinBiSet& x, const BiCell& c) {
  auto i = x.cell_index(c);
  if (!i) throw InvariantViolation("cell outside its level");
  return static_cast<std::int64_t>(*i);
}

const BiCell& cell_at(const FinBiSet& x, const Degree<2>& d, std::int64_t i) {
  return x.cells(d)[static_cast<std::size_t>(i)];
}

/// x degenerated to degree (k, m).
BiCell constant_at(const FinBiSet& x, std::uint32_t vertex, int k, int m) {
  return x.apply({OrdinalMap(0, std::vector<int>(static_cast<std::size_t>(k) + 1, 0)),
                  OrdinalMap(0, std::vector<int>(static_cast<std::size_t>(m) + 1, 0))},
                 x.generator_cell(vertex));
}

std::string key_label(const Degree<2>& d, const LevelKey& key) {
  std::string s = "[";
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
  return s + "]@" + std::to_string(d[0]) + "," + std::to_string(d[1]);
}

void require_vertex(const FinBiSet& x, std::uint32_t v, const char* what) {
  if (v >= x.size() || x.generator(v).degree != Degree<2>{0, 0}) throw std::invalid_argument(std::string(what) + ": not a vertex");
}

void finish(OverBase& o, const LevelOracle<2>& oracle, const std::function<BiCell(const Degree<2>&, const LevelKey&)>& project) {
  o.normalized = normalize<2>(oracle, {o.first_bound, o.second_bound}, o.first_bound + o.second_bound);
  o.object = o.normalized.object;
  for (auto& [d, table] : o.normalized.cell_of) {
    auto& keys = o.keys_by_cell[d];
    keys.resize(o.object->cells(d).size());
    for (auto& [key, cell] : table) keys[*o.object->cell_index(cell)] = key;
  }
  std::vector<BiCell> a;
  for (std::uint32_t g = 0; g < o.object->size(); ++g)
    a.push_back(project(o.object->generator(g).degree, o.normalized.generator_key[g]));
  o.projection = BiMap(o.object, o.base, std::move(a));
}

OrdinalMap values_map(int cod, const std::vector<int>& v) { return OrdinalMap(cod, v); }

}  // namespace

const LevelKey& OverBase::key_of(const BiCell& c) const {
  auto it = keys_by_cell.find(c.degree());
  if (it == keys_by_cell.end()) throw std::out_of_range("key_of: degree not enumerated");
  return it->second.at(*object->cell_index(c));
}

// ---------------------------------------------------------------------------

BiCell Under::value(int n, int m, const LevelKey& key, const Simplex& prism_cell) const {
  const auto& p = *prisms.at(static_cast<std::size_t>(n))->object();
  const int k = p.generator(prism_cell.gen).degree[0];
  const BiCell& c = cell_at(*base, {k, m}, key[prism_cell.gen]);
  return base->apply({prism_cell.epis[0], OrdinalMap::identity(m)}, c);
}

LevelKey Under::precompose(int n, int m, const LevelKey& key, int k,
                           const std::function<std::array<int, 2>(int, int)>& phi) const {
  const auto& from = *prisms.at(static_cast<std::size_t>(k));
  const auto& to = *prisms.at(static_cast<std::size_t>(n));
  const auto& delta_n = to.first().target();
  const auto& delta_1 = to.second().target();
  LevelKey out;
  for (std::uint32_t g = 0; g < from.object()->size(); ++g) {
    Simplex c = from.object()->generator_cell(g);
    const int d = from.object()->generator(g).degree[0];
    auto a = standard_arrow<1>(from.first().target(), {k}, from.first().image(c))[0];
    auto b = standard_arrow<1>(from.second().target(), {1}, from.second().image(c))[0];
    std::vector<int> u, v;
    for (int t = 0; t <= d; ++t) {
      auto img = phi(a(t), b(t));
      u.push_back(img[0]);
      v.push_back(img[1]);
    }
    Simplex target = to.pair(standard_simplex(delta_n, n, values_map(n, u)), standard_simplex(delta_1, 1, values_map(1, v)));
    out.push_back(index_in(*base, value(n, m, key, target)));
  }
  return out;
}

Under under(const BiSet& x, std::uint32_t vertex, std::optional<int> first_bound, std::optional<int> second_bound) {
  require_vertex(*x, vertex, "under");
  Under u;
  u.base = x;
  u.vertex = vertex;
  u.first_bound = first_bound.value_or(std::max(0, x->dimension()[0]));
  u.second_bound = second_bound.value_or(std::max(0, x->dimension()[1]));
  for (int n = 0; n <= u.first_bound + 1; ++n)
    u.prisms.push_back(std::make_shared<Product<1>>(standard(n), standard(1)));
  std::vector<std::shared_ptr<Slice>> columns;
  for (int m = 0; m <= u.second_bound; ++m) columns.push_back(std::make_shared<Slice>(column(x, m, u.first_bound + 1)));

  const Under* self = &u;
  LevelOracle<2> oracle;
  oracle.elements = [self, &columns, x, vertex](const Degree<2>& d) {
    const int n = d[0], m = d[1];
    const auto& prism = *self->prisms.at(static_cast<std::size_t>(n));
    const auto& col = *columns.at(static_cast<std::size_t>(m));
    const auto& p = *prism.object();
    HomConstraints<1> cons;
    cons.fixed.resize(p.size());
    for (std::uint32_t g = 0; g < p.size(); ++g) {
      auto b = standard_arrow<1>(prism.second().target(), {1}, prism.second().image(p.generator_cell(g)))[0];
      bool bottom = true;
      for (int t = 0; t <= b.dom(); ++t) bottom = bottom && b(t) == 0;
      if (bottom) cons.fixed[g] = col.simplex_of(constant_at(*x, vertex, p.generator(g).degree[0], m));
    }
    std::vector<LevelKey> out;
    for_each_map<1>(p, *col.object(), cons, [&](const std::vector<Simplex>& a) {
      LevelKey key;
      for (auto& s : a) key.push_back(index_in(*x, col.cell_of(s)));
      out.push_back(std::move(key));
      check_budget(out.size(), "undercategory level");
      return true;
    });
    return out;
  };
  oracle.act = [self, x](const BiOrdinalMap& tau, const LevelKey& key) {
    const int n = tau[0].cod(), m = tau[1].cod();
    const OrdinalMap t1 = tau[0];
    LevelKey moved = self->precompose(n, m, key, tau[0].dom(), [&t1](int i, int j) { return std::array<int, 2>{t1(i), j}; });
    if (tau[1].is_identity()) return moved;
    const auto& p = *self->prisms.at(static_cast<std::size_t>(tau[0].dom()))->object();
    LevelKey out;
    for (std::uint32_t g = 0; g < p.size(); ++g) {
      const int k = p.generator(g).degree[0];
      const BiCell& c = cell_at(*x, {k, m}, moved[g]);
      out.push_back(index_in(*x, x->apply({OrdinalMap::identity(k), tau[1]}, c)));
    }
    return out;
  };
  oracle.label = key_label;
  auto top_of = [self](int n) {
    const auto& prism = *self->prisms.at(static_cast<std::size_t>(n));
    std::vector<int> ones(static_cast<std::size_t>(n) + 1, 1);
    return prism.pair(standard_simplex(prism.first().target(), n, OrdinalMap::identity(n)),
                      standard_simplex(prism.second().target(), 1, OrdinalMap(1, ones)));
  };
  finish(u, oracle, [self, top_of](const Degree<2>& d, const LevelKey& key) {
    return self->value(d[0], d[1], key, top_of(d[0]));
  });

  const auto& p0 = *u.prisms[0]->object();
  LevelKey id_key;
  for (std::uint32_t g = 0; g < p0.size(); ++g)
    id_key.push_back(index_in(*x, constant_at(*x, vertex, p0.generator(g).degree[0], 0)));
  u.id_x = u.normalized.lookup({0, 0}, id_key);
  return u;
}

RetractionReport under_retraction(const BiSet& x, std::uint32_t vertex, int max_n, int max_m) {
  RetractionReport rep;
  rep.m_kills_a = true;
  auto mult = [](int i, int j) { return i * j; };
  for (int i = 0; i <= 1; ++i) rep.m_kills_a = rep.m_kills_a && mult(i, 0) == 0 && mult(0, i) == 0;

  Under u = under(x, vertex, max_n + 1, max_m);
  Under uu = under(u.object, u.id_x.gen, max_n, max_m);
  rep.section = true;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m) {
      const auto& cells = u.object->cells({n, m});
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const LevelKey& h = u.keys_by_cell.at({n, m})[ci];
        const auto& prism = *uu.prisms.at(static_cast<std::size_t>(n));
        LevelKey rkey;
        for (std::uint32_t g = 0; g < prism.object()->size(); ++g) {
          Simplex c = prism.object()->generator_cell(g);
          const int k = prism.object()->generator(g).degree[0];
          auto a = standard_arrow<1>(prism.first().target(), {n}, prism.first().image(c))[0];
          auto b = standard_arrow<1>(prism.second().target(), {1}, prism.second().image(c))[0];
          LevelKey inner = u.precompose(n, m, h, k, [&](int t, int j) { return std::array<int, 2>{a(t), b(t) * j}; });
          rkey.push_back(index_in(*u.object, u.normalized.lookup({k, m}, inner)));
        }
        BiCell r = uu.normalized.lookup({n, m}, rkey);
        if (!(uu.projection.image(r) == cells[ci])) rep.section = false;
        if (cells[ci] == u.id_x) rep.id_to_id = r == uu.id_x;
        ++rep.cells_checked;
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------

OverBase tilde_under(const BiSet& x, std::uint32_t vertex, std::optional<int> first_bound, std::optional<int> second_bound) {
  require_vertex(*x, vertex, "tilde_under");
  OverBase o;
  o.base = x;
  o.vertex = vertex;
  o.first_bound = first_bound.value_or(std::max(0, x->dimension()[0]));
  o.second_bound = second_bound.value_or(std::max(0, x->dimension()[1]));
  LevelOracle<2> oracle;
  oracle.elements = [x, vertex](const Degree<2>& d) {
    std::vector<LevelKey> out;
    const auto& cells = x->cells({d[0] + 1, d[1]});
    const BiCell xs = constant_at(*x, vertex, 0, d[1]);
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (x->apply({OrdinalMap(d[0] + 1, {0}), OrdinalMap::identity(d[1])}, cells[i]) == xs)
        out.push_back({static_cast<std::int64_t>(i)});
    return out;
  };
  oracle.act = [x](const BiOrdinalMap& tau, const LevelKey& key) {
    const BiCell& c = cell_at(*x, {tau[0].cod() + 1, tau[1].cod()}, key[0]);
    return LevelKey{index_in(*x, x->apply({cone_shift(tau[0]), tau[1]}, c))};
  };
  oracle.label = key_label;
  finish(o, oracle, [x](const Degree<2>& d, const LevelKey& key) {
    const BiCell& c = cell_at(*x, {d[0] + 1, d[1]}, key[0]);
    return x->apply({shift(1, d[0], d[0] + 1), OrdinalMap::identity(d[1])}, c);
  });
  return o;
}

OverBase twisted_fiber(const BiSet& x, std::uint32_t vertex, int first_bound, std::optional<int> second_bound) {
  require_vertex(*x, vertex, "twisted_fiber");
  OverBase o;
  o.base = x;
  o.vertex = vertex;
  o.first_bound = first_bound;
  o.second_bound = second_bound.value_or(std::max(0, x->dimension()[1]));
  LevelOracle<2> oracle;
  oracle.elements = [x, vertex](const Degree<2>& d) {
    const int n = d[0], m = d[1];
    std::vector<LevelKey> out;
    const auto& cells = x->cells({2 * n + 1, m});
    const BiCell xs = constant_at(*x, vertex, n, m);
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (x->apply({shift(0, n, 2 * n + 1), OrdinalMap::identity(m)}, cells[i]) == xs)
        out.push_back({static_cast<std::int64_t>(i)});
    return out;
  };
  oracle.act = [x](const BiOrdinalMap& tau, const LevelKey& key) {
    const BiCell& c = cell_at(*x, {2 * tau[0].cod() + 1, tau[1].cod()}, key[0]);
    return LevelKey{index_in(*x, x->apply({twist(tau[0]), tau[1]}, c))};
  };
  oracle.label = key_label;
  finish(o, oracle, [x](const Degree<2>& d, const LevelKey& key) {
    const int n = d[0];
    const BiCell& c = cell_at(*x, {2 * n + 1, d[1]}, key[0]);
    return x->apply({shift(n + 1, n, 2 * n + 1), OrdinalMap::identity(d[1])}, c);
  });
  return o;
}

BiMap psi_prime(const OverBase& tilde, const Under& u) {
  const auto& x = *tilde.base;
  std::vector<BiCell> a;
  for (std::uint32_t g = 0; g < tilde.object->size(); ++g) {
    const auto d = tilde.object->generator(g).degree;
    const int n = d[0], m = d[1];
    const BiCell& c = cell_at(x, {n + 1, m}, tilde.normalized.generator_key[g][0]);
    const auto& prism = *u.prisms.at(static_cast<std::size_t>(n));
    LevelKey key;
    for (std::uint32_t h = 0; h < prism.object()->size(); ++h) {
      Simplex s = prism.object()->generator_cell(h);
      auto pa = standard_arrow<1>(prism.first().target(), {n}, prism.first().image(s))[0];
      auto pb = standard_arrow<1>(prism.second().target(), {1}, prism.second().image(s))[0];
      std::vector<int> v;
      for (int t = 0; t <= pa.dom(); ++t) v.push_back((pa(t) + pb(t)) * pb(t));
      key.push_back(index_in(x, x.apply({OrdinalMap(n + 1, v), OrdinalMap::identity(m)}, c)));
    }
    a.push_back(u.normalized.lookup(d, key));
  }
  return BiMap(tilde.object, u.object, std::move(a));
}

namespace {

OrdinalMap r_map(int n) {
  std::vector<int> v(static_cast<std::size_t>(2 * n + 2));
  for (int i = 0; i <= n; ++i) {
    v[static_cast<std::size_t>(i)] = 0;
    v[static_cast<std::size_t>(n + 1 + i)] = i + 1;
  }
  return OrdinalMap(n + 1, v);
}

}  // namespace

BiMap psi_dprime(const OverBase& tilde, const OverBase& fiber) {
  const auto& x = *tilde.base;
  std::vector<BiCell> a;
  for (std::uint32_t g = 0; g < tilde.object->size(); ++g) {
    const auto d = tilde.object->generator(g).degree;
    const BiCell& c = cell_at(x, {d[0] + 1, d[1]}, tilde.normalized.generator_key[g][0]);
    BiCell w = x.apply({r_map(d[0]), OrdinalMap::identity(d[1])}, c);
    a.push_back(fiber.normalized.lookup(d, {index_in(x, w)}));
  }
  return BiMap(tilde.object, fiber.object, std::move(a));
}

PsiReport check_psi(const BiSet& x, std::uint32_t vertex, int first_bound) {
  PsiReport rep;
  auto tilde = tilde_under(x, vertex, first_bound);
  auto u = under(x, vertex, first_bound);
  auto fib = twisted_fiber(x, vertex, first_bound);
  auto p1 = psi_prime(tilde, u);
  auto p2 = psi_dprime(tilde, fib);
  rep.prime_over_x = compose(u.projection, p1).assignment() == tilde.projection.assignment();
  rep.dprime_over_x = compose(fib.projection, p2).assignment() == tilde.projection.assignment();

  // Level 0: both sides are {x} x_{X_0} X_1 and the maps are identities.
  rep.level0_identity = true;
  const int m_top = tilde.second_bound;
  for (int m = 0; m <= m_top; ++m) {
    const auto& tcells = tilde.object->cells({0, m});
    if (tcells.size() != u.object->cells({0, m}).size()) rep.level0_identity = false;
    const auto& prism = *u.prisms[0];
    Simplex edge = prism.pair(standard_simplex(prism.first().target(), 0, OrdinalMap(0, {0, 0})),
                              standard_simplex(prism.second().target(), 1, OrdinalMap::identity(1)));
    for (std::size_t i = 0; i < tcells.size(); ++i) {
      const BiCell& c = cell_at(*x, {1, m}, tilde.keys_by_cell.at({0, m})[i][0]);
      BiCell in_u = p1.image(tcells[i]);
      if (!(u.value(0, m, u.key_of(in_u), edge) == c)) rep.level0_identity = false;
      BiCell in_f = p2.image(tcells[i]);
      if (!(cell_at(*x, {1, m}, fib.key_of(in_f)[0]) == c)) rep.level0_identity = false;
    }
  }

  rep.dprime_injective = true;
  rep.section = true;
  for (int n = 0; n <= first_bound; ++n)
    for (int m = 0; m <= m_top; ++m) {
      std::set<std::size_t> images;
      const auto& tcells = tilde.object->cells({n, m});
      for (std::size_t i = 0; i < tcells.size(); ++i) {
        BiCell w = p2.image(tcells[i]);
        images.insert(*fib.object->cell_index(w));
        const BiCell& c = cell_at(*x, {n + 1, m}, tilde.keys_by_cell.at({n, m})[i][0]);
        const BiCell& wx = cell_at(*x, {2 * n + 1, m}, fib.key_of(w)[0]);
        if (!(x->apply({shift(n, n + 1, 2 * n + 1), OrdinalMap::identity(m)}, wx) == c)) rep.section = false;
      }
      if (images.size() != tcells.size()) rep.dprime_injective = false;
    }
  return rep;
}

// ---------------------------------------------------------------------------

void validate_set_functor(const FinCat& c, const SetFunctor& f) {
  auto fail = [](const std::string& m) { throw std::invalid_argument("set functor: " + m); };
  if (f.sizes.size() != c.objects.size() || f.on_arrows.size() != c.arrows.size()) fail("wrong table sizes");
  for (int s : f.sizes)
    if (s < 0) fail("negative size");
  auto dom = [&](std::size_t a) { return f.contravariant ? c.arrows[a].target : c.arrows[a].source; };
  auto cod = [&](std::size_t a) { return f.contravariant ? c.arrows[a].source : c.arrows[a].target; };
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    if (static_cast<int>(f.on_arrows[a].size()) != f.sizes[static_cast<std::size_t>(dom(a))]) fail("function has wrong domain");
    for (int v : f.on_arrows[a])
      if (v < 0 || v >= f.sizes[static_cast<std::size_t>(cod(a))]) fail("function value out of range");
  }
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    const auto& id = f.on_arrows[static_cast<std::size_t>(c.identity[x])];
    for (std::size_t e = 0; e < id.size(); ++e)
      if (id[e] != static_cast<int>(e)) fail("identity not preserved");
  }
  for (std::size_t g = 0; g < c.arrows.size(); ++g)
    for (std::size_t h = 0; h < c.arrows.size(); ++h) {
      int gh = c.comp(static_cast<int>(g), static_cast<int>(h));
      if (gh < 0) continue;
      const auto& fgh = f.on_arrows[static_cast<std::size_t>(gh)];
      for (std::size_t e = 0; e < fgh.size(); ++e) {
        int via = f.contravariant ? f.on_arrows[h][static_cast<std::size_t>(f.on_arrows[g][e])]
                                  : f.on_arrows[g][static_cast<std::size_t>(f.on_arrows[h][e])];
        if (via != fgh[e]) fail("composition not preserved");
      }
    }
}

SetFunctor representable(const FinCat& c, int x) {
  SetFunctor f;
  std::vector<std::vector<int>> homs;
  for (std::size_t y = 0; y < c.objects.size(); ++y) {
    homs.push_back(c.hom(x, static_cast<int>(y)));
    f.sizes.push_back(static_cast<int>(homs.back().size()));
  }
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    const auto& src = homs[static_cast<std::size_t>(c.arrows[a].source)];
    const auto& tgt = homs[static_cast<std::size_t>(c.arrows[a].target)];
    std::vector<int> fn;
    for (int h : src) {
      int composite = c.comp(static_cast<int>(a), h);
      fn.push_back(static_cast<int>(std::find(tgt.begin(), tgt.end(), composite) - tgt.begin()));
    }
    f.on_arrows.push_back(std::move(fn));
  }
  return f;
}

std::uint32_t ElementsFibration::base_vertex(int x) const { return base_nerve.simplex_of(0, {x}).gen; }

std::vector<std::uint32_t> ElementsFibration::fiber(int x) const {
  std::vector<std::uint32_t> out;
  const auto v = base_vertex(x);
  for (auto& c : total->cells({0, 0}))
    if (projection.image(c).gen == v) out.push_back(c.gen);
  return out;
}

ElementsFibration elements(const FinCat& c, const SetFunctor& f, std::optional<int> max_dim) {
  validate_set_functor(c, f);
  ElementsFibration e;
  e.category = c;
  e.functor = f;
  const FinCat* cat = &e.category;
  const SetFunctor* fn = &e.functor;
  e.base_nerve = nerve(e.category, max_dim);
  const int top = e.base_nerve.object->empty() ? 0 : e.base_nerve.object->dimension()[0];
  const int dim = max_dim.value_or(top);

  auto anchor = [cat, fn](int n, const LevelKey& chain) {
    auto objs = chain_objects(*cat, n, chain);
    return fn->contravariant ? objs.back() : objs.front();
  };
  LevelOracle<1> oracle;
  oracle.elements = [cat, fn, anchor](const Degree<1>& d) {
    std::vector<LevelKey> out;
    for (auto& ch : chains(*cat, d[0])) {
      const int size = fn->sizes[static_cast<std::size_t>(anchor(d[0], ch))];
      for (int el = 0; el < size; ++el) {
        LevelKey key = ch;
        key.push_back(el);
        out.push_back(std::move(key));
      }
      check_budget(out.size(), "elements level");
    }
    return out;
  };
  oracle.act = [cat, fn](const MultiOrdinal<1>& tau, const LevelKey& key) {
    const OrdinalMap& t = tau[0];
    const int n = t.cod();
    LevelKey ch(key.begin(), key.end() - 1);
    const int el = static_cast<int>(key.back());
    LevelKey out = chain_act(*cat, t, ch);
    int moved;
    if (fn->contravariant) {
      int arrow = chain_composite(*cat, n, ch, t(t.dom()), n);
      moved = fn->on_arrows[static_cast<std::size_t>(arrow)][static_cast<std::size_t>(el)];
    } else {
      int arrow = chain_composite(*cat, n, ch, 0, t(0));
      moved = fn->on_arrows[static_cast<std::size_t>(arrow)][static_cast<std::size_t>(el)];
    }
    out.push_back(moved);
    return out;
  };
  oracle.label = [cat](const Degree<1>& d, const LevelKey& key) {
    std::string s;
    if (d[0] == 0) {
      s = cat->objects[static_cast<std::size_t>(key[0])];
    } else {
      for (std::size_t i = 0; i + 1 < key.size(); ++i) s += (i ? "|" : "") + cat->arrows[static_cast<std::size_t>(key[i])].name;
    }
    return s + ":" + std::to_string(key.back());
  };
  auto norm = normalize<1>(oracle, {dim}, dim);
  e.total_sset = norm.object;
  e.keys = norm.generator_key;
  std::vector<Simplex> a;
  for (std::uint32_t g = 0; g < e.total_sset->size(); ++g) {
    const int level = e.total_sset->generator(g).degree[0];
    const auto& key = e.keys[g];
    a.push_back(e.base_nerve.simplex_of(level, LevelKey(key.begin(), key.end() - 1)));
  }
  SSetMap p(e.total_sset, e.base_nerve.object, std::move(a));
  e.base = disc(e.base_nerve.object);
  e.total = disc(e.total_sset);
  e.projection = disc(p, e.total, e.base);
  return e;
}

EvaluationReport evaluation_check(const ElementsFibration& e, int x, int under_bound) {
  EvaluationReport rep;
  Under u = under(e.base, e.base_vertex(x), under_bound);
  HomConstraints<2> cons;
  cons.over = &e.projection;
  cons.over_base = &u.projection;
  auto fiber = e.fiber(x);
  rep.fiber = fiber.size();
  std::set<std::uint32_t> images;
  for_each_map<2>(*u.object, *e.total, cons, [&](const std::vector<BiCell>& a) {
    ++rep.maps;
    BiMap m(u.object, e.total, a, false);
    images.insert(m.image(u.id_x).gen);
    return true;
  });
  rep.injective = images.size() == rep.maps;
  rep.surjective = images == std::set<std::uint32_t>(fiber.begin(), fiber.end());
  return rep;
}

YonedaReport fully_faithful_yoneda_check(const FinCat& c, std::optional<int> max_dim) {
  YonedaReport rep;
  auto bound = c.chain_bound();
  int dim = max_dim.value_or(bound ? std::max(*bound, 3) : 3);
  Nerve nc = nerve(c, dim);
  BiSet x = disc(nc.object);
  auto tp = twist_projection(x, 1);
  const auto& tw = *tp.twisted;
  const auto& op = *tp.opposite;
  auto ho = homotopy_category(x);
  const auto& edges = x->cells({1, 0});
  auto edge_index = [&](const BiCell& e) { return static_cast<int>(std::find(edges.begin(), edges.end(), e) - edges.begin()); };

  rep.counts_match = true;
  const int nobj = static_cast<int>(c.objects.size());
  std::vector<std::vector<std::set<int>>> fiber(static_cast<std::size_t>(nobj), std::vector<std::set<int>>(static_cast<std::size_t>(nobj)));
  std::map<std::uint32_t, int> object_of;
  for (int o = 0; o < nobj; ++o) object_of[nc.simplex_of(0, {o}).gen] = o;
  for (auto& w : tw.object()->cells({0, 0})) {
    BiCell img = tp.map.image(w);
    BiCell src = op.source_cell(tp.product->first().image(img));
    BiCell tgt = tp.product->second().image(img);
    int a = object_of.at(src.gen), b = object_of.at(tgt.gen);
    fiber[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].insert(edge_index(tw.source_cell(w)));
  }
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b) {
      const auto& f = fiber[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      std::set<int> homs;
      for (auto& e : mapping_set(*x, nc.simplex_of(0, {a}).gen, nc.simplex_of(0, {b}).gen)) homs.insert(edge_index(e));
      rep.fibers.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), f.size(), c.hom(a, b).size()});
      if (f != homs || f.size() != c.hom(a, b).size()) rep.counts_match = false;
    }

  rep.natural = true;
  auto restrict = [&](const BiCell& w, std::initializer_list<int> v) {
    return x->apply({OrdinalMap(3, v), OrdinalMap::identity(0)}, w);
  };
  for (auto& cell : tw.object()->cells({1, 0})) {
    BiCell w = tw.source_cell(cell);
    int a1 = edge_index(restrict(w, {0, 1})), a2 = edge_index(restrict(w, {1, 2})), a3 = edge_index(restrict(w, {2, 3}));
    BiCell v0 = tw.source_cell(tw.object()->vertex(cell, {0, 0}));
    BiCell v1 = tw.source_cell(tw.object()->vertex(cell, {1, 0}));
    int expected = ho.category.comp(a3, ho.category.comp(a2, a1));
    if (edge_index(v0) != a2 || edge_index(v1) != expected) rep.natural = false;
    BiCell img = tp.map.image(cell);
    if (!(op.source_cell(tp.product->first().image(img)) == edges[static_cast<std::size_t>(a1)])) rep.natural = false;
    if (!(tp.product->second().image(img) == edges[static_cast<std::size_t>(a3)])) rep.natural = false;
    ++rep.squares;
  }
  return rep;
}

}  // namespace segalkit
