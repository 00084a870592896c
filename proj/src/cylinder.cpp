#include "segalkit/cylinder.hpp"

#include <stdexcept>
#include <unordered_set>

namespace segalkit {

namespace {

BiOrdinalMap first_axis(const OrdinalMap& t) { return {t, OrdinalMap::identity(0)}; }

BiCell vertex_of_f(const FinBiSet& fm, int m, int i) { return box_cell(fm, m, 0, first_axis(OrdinalMap(m, {i}))); }

/// The map sending every cell of x to the matching degeneracy of a vertex of y.
BiMap constant_map(const BiSet& x, const BiSet& y, const BiCell& v) {
  std::vector<BiCell> a;
  for (std::uint32_t g = 0; g < x->size(); ++g) {
    auto d = x->generator(g).degree;
    a.push_back(y->apply({OrdinalMap(0, std::vector<int>(static_cast<std::size_t>(d[0]) + 1, 0)),
                          OrdinalMap(0, std::vector<int>(static_cast<std::size_t>(d[1]) + 1, 0))},
                         v));
  }
  return BiMap(x, y, std::move(a));
}

BiMap e_map(const BiSet& from, int k, const BiSet& to, int m, int j) {
  return standard_map<2>(from, {k, 0}, to, {m, 0}, first_axis(shift(j, k, m)));
}

BiMap e_map_face(const BiSet& fn, const BiSet& fn1, int n, int i) {
  return standard_map<2>(fn, {n, 0}, fn1, {n + 1, 0}, first_axis(face(i, n + 1)));
}

}  // namespace

ChainOverB ChainOverB::tail() const {
  if (objects.size() < 2) throw std::invalid_argument("chain: no tail of a chain of length 0");
  ChainOverB t;
  t.base = base;
  t.objects.assign(objects.begin() + 1, objects.end());
  t.to_base.assign(to_base.begin() + 1, to_base.end());
  t.maps.assign(maps.begin() + 1, maps.end());
  return t;
}

void ChainOverB::validate() const {
  auto fail = [](const std::string& m) { throw std::invalid_argument("chain: " + m); };
  if (objects.empty()) fail("no objects");
  if (to_base.size() != objects.size() || maps.size() + 1 != objects.size()) fail("wrong number of maps");
  for (std::size_t j = 0; j < objects.size(); ++j) {
    if (to_base[j].source_ptr() != objects[j] || !to_base[j].target().same_structure(*base)) fail("projection has the wrong ends");
    if (auto why = to_base[j].commutation_failure()) fail(*why);
  }
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (maps[j].source_ptr() != objects[j] || maps[j].target_ptr() != objects[j + 1]) fail("map has the wrong ends");
    if (compose(to_base[j + 1], maps[j]).assignment() != to_base[j].assignment())
      fail("triangle " + std::to_string(j) + " does not commute over the base");
  }
}

ChainOverB make_chain(BiSet base, std::vector<BiSet> objects, std::vector<BiMap> to_base, std::vector<BiMap> maps) {
  ChainOverB c{std::move(base), std::move(objects), std::move(to_base), std::move(maps)};
  c.validate();
  return c;
}

Cylinder cyl_disc(const ChainOverB& f) {
  f.validate();
  const int m = f.length();
  const BiSet& k0 = f.objects[0];
  Cylinder c;
  c.length = m;
  BiSet fm = F(m);
  c.base = std::make_shared<Product<2>>(f.base, fm);
  if (m == 0) {
    c.object = k0;
    c.projection = c.base->pairing(f.to_base[0], constant_map(k0, fm, fm->generator_cell(0)));
    c.iota_sources.push_back(std::make_shared<Product<2>>(k0, fm));
    c.iota.push_back(c.iota_sources[0]->first());
    return c;
  }
  Cylinder sub = cyl_disc(f.tail());
  const BiSet& fm1 = sub.base->second().target_ptr();
  BiMap e1 = e_map(fm1, m - 1, fm, m, 1);
  Product<2> glue(k0, fm1);
  auto x = std::make_shared<Product<2>>(k0, fm);
  BiMap left = product_map<2>(glue, *x, BiMap::identity(k0), e1);
  BiMap right = compose(sub.iota[0], product_map<2>(glue, *sub.iota_sources[0], f.maps[0], BiMap::identity(fm1)));
  Pushout<2> p(left, right);
  c.object = p.object();
  BiMap u = product_map<2>(*x, *c.base, f.to_base[0], BiMap::identity(fm));
  BiMap v = compose(product_map<2>(*sub.base, *c.base, BiMap::identity(f.base), e1), sub.projection);
  c.projection = p.induced(u, v);
  c.iota_sources.push_back(x);
  c.iota.push_back(p.left());
  for (std::size_t j = 0; j < sub.iota.size(); ++j) {
    c.iota_sources.push_back(sub.iota_sources[j]);
    c.iota.push_back(compose(p.right(), sub.iota[j]));
  }
  return c;
}

Endpoint endpoint(const Cylinder& c, int i) {
  if (i < 0 || i > c.length) throw std::out_of_range("endpoint: vertex out of range");
  const auto& fm = c.base->second().target();
  BiMap to_f = compose(c.base->second(), c.projection);
  Endpoint e;
  e.fiber = std::make_shared<Product<2>>(fiber<2>(to_f, vertex_of_f(fm, c.length, i).gen));
  e.to_base = compose(c.base->first(), compose(c.projection, e.fiber->second()));
  return e;
}

CylinderReport check_cylinder(const ChainOverB& f, const Cylinder& c) {
  CylinderReport rep;
  const int m = c.length;
  rep.endpoints = true;
  for (int i = 0; i <= m; ++i) {
    Endpoint e = endpoint(c, i);
    const auto& k = f.objects[static_cast<std::size_t>(i)];
    if (!find_isomorphism<2>(e.fiber->object(), k, &e.to_base, &f.to_base[static_cast<std::size_t>(i)])) rep.endpoints = false;
  }
  rep.iota_over_base = true;
  rep.iota_endpoints = true;
  const BiSet& fm = c.base->second().target_ptr();
  for (int j = 0; j <= m; ++j) {
    const auto& src = *c.iota_sources[static_cast<std::size_t>(j)];
    const BiMap& iota = c.iota[static_cast<std::size_t>(j)];
    const BiSet& fk = src.second().target_ptr();
    BiMap expected = product_map<2>(src, *c.base, f.to_base[static_cast<std::size_t>(j)], e_map(fk, m - j, fm, m, j));
    if (compose(c.projection, iota).assignment() != expected.assignment()) rep.iota_over_base = false;

    // iota_j on K^(j) x {0} is K^(j) -> Cyl|_j.
    const BiSet& k = f.objects[static_cast<std::size_t>(j)];
    BiMap at_zero = src.pairing(BiMap::identity(k), constant_map(k, fk, vertex_of_f(*fk, m - j, 0)));
    BiMap into = compose(iota, at_zero);
    Endpoint e = endpoint(c, j);
    const auto& pt = e.fiber->first().target_ptr();
    BiMap lifted = e.fiber->pairing(constant_map(k, pt, pt->generator_cell(0)), into);
    if (!is_isomorphism<2>(lifted)) rep.iota_endpoints = false;
  }
  rep.iota0_mono = c.iota[0].is_injective_on_generators();
  // A cell over tau with tau(0) = j is identified along f_j o ... o f_1.
  bool composite_mono = true;
  if (m > 0) {
    BiMap composite = f.maps[0];
    for (std::size_t j = 1; j < f.maps.size(); ++j) composite = compose(f.maps[j], composite);
    composite_mono = composite.is_injective_on_generators();
  }
  rep.iota0_mono_iff_composite_mono = rep.iota0_mono == composite_mono;
  const auto& x = *c.iota_sources[0];
  std::unordered_set<BiCell, CellHash<2>> seen;
  rep.iota0_injective_off_face = true;
  for (std::uint32_t g = 0; g < x.object()->size(); ++g) {
    BiCell cell = x.object()->generator_cell(g);
    auto tau = standard_arrow<2>(*fm, {m, 0}, x.second().image(cell))[0];
    if (tau(0) != 0) continue;
    const BiCell& img = c.iota[0].assignment()[g];
    if (!img.is_generator() || !seen.insert(img).second) rep.iota0_injective_off_face = false;
  }
  return rep;
}

FiberFormulaReport fiber_formula_check(const ChainOverB& f, const Cylinder& c, int max_n) {
  FiberFormulaReport rep;
  for (int n = 0; n <= max_n; ++n) {
    auto dec = tau_decompose(c.projection, *c.base, c.length, n);
    std::vector<std::shared_ptr<Slice>> rows;
    std::vector<SSetMap> to_base;
    for (auto& k : f.objects) {
      rows.push_back(std::make_shared<Slice>(row(k, n)));
      const auto& r = *rows.back();
      const BiMap& p = f.to_base[rows.size() - 1];
      std::vector<Simplex> a;
      for (std::uint32_t g = 0; g < r.object()->size(); ++g)
        a.push_back(dec.base_row->simplex_of(p.image(r.cell_of(r.object()->generator_cell(g)))));
      to_base.emplace_back(r.object(), dec.base_row->object(), std::move(a), false);
    }
    for (auto& piece : dec.pieces) {
      ++rep.pieces;
      const auto j = static_cast<std::size_t>(piece.tau(0));
      if (!find_isomorphism<1>(piece.piece.object, rows[j]->object(), &piece.to_base, &to_base[j]))
        rep.mismatches.push_back("n=" + std::to_string(n) + " tau=" + piece.tau.to_string());
    }
  }
  return rep;
}

std::pair<BiOrdinalMap, BiOrdinalMap> gamma_eps_maps(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::out_of_range("gamma_eps_maps: need 0 <= i <= n");
  std::vector<int> ga, gb, ea, eb;
  for (int j = 0; j <= n + 1; ++j) {
    ga.push_back(j <= i ? j : j - 1);
    gb.push_back(j <= i ? 0 : 1);
  }
  for (int j = 0; j <= n; ++j) {
    ea.push_back(j);
    eb.push_back(j <= i ? 0 : 1);
  }
  return {{OrdinalMap(n, ga), OrdinalMap(1, gb)}, {OrdinalMap(n, ea), OrdinalMap(1, eb)}};
}

PrismDecomposition prism_decomposition(int n) {
  if (n < 0) throw std::out_of_range("prism_decomposition: n < 0");
  PrismDecomposition d;
  d.n = n;
  BiSet fn = F(n), f1 = F(1), fn1 = F(n + 1);
  d.product = std::make_shared<Product<2>>(fn, f1);
  std::vector<BiMap> to_product;
  for (int i = 0; i <= n; ++i) {
    auto [g, e] = gamma_eps_maps(n, i);
    d.gamma.push_back(g);
    d.eps.push_back(e);
    BiCell top = d.product->pair(box_cell(*fn, n, 0, first_axis(g[0])), box_cell(*f1, 1, 0, first_axis(g[1])));
    to_product.push_back(characteristic_map<2>(fn1, d.product->object(), top));
  }

  // Copies i - 1 and i meet in F[n] along d^i.
  d.glued = fn1;
  d.legs.push_back(BiMap::identity(fn1));
  BiMap glued_map = to_product[0];
  for (int i = 1; i <= n; ++i) {
    BiMap face = e_map_face(fn, fn1, n, i);
    Pushout<2> p(compose(d.legs.back(), face), face);
    for (auto& leg : d.legs) leg = compose(p.left(), leg);
    d.legs.push_back(p.right());
    glued_map = p.induced(glued_map, to_product[static_cast<std::size_t>(i)]);
    d.glued = p.object();
  }
  d.comparison = glued_map;

  d.counts_match = true;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 1; ++b)
      if (d.glued->cells({a, b}).size() != d.product->object()->cells({a, b}).size()) d.counts_match = false;
  if (d.counts_match) d.isomorphism = is_isomorphism<2>(d.comparison);
  if (!d.isomorphism) throw InvariantViolation("prism_decomposition: the glued object is not F[n] x F[1]");
  return d;
}

ChainOverB random_chain(std::mt19937_64& rng, int m) {
  static const std::vector<SSet> pool = [] {
    std::vector<SSet> p = {standard(0), standard(1), boundary(2), horn(2, 1), horn(2, 0)};
    p.push_back(coproduct<1>({standard(0), standard(0)}).object);
    p.push_back(coproduct<1>({standard(1), standard(0)}).object);
    p.push_back(boundary(1));
    return p;
  }();
  static const std::vector<SSet> bases = {standard(0), standard(1), boundary(2), standard(0)};
  auto pick = [&rng](const std::vector<SSet>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  auto random_map = [&rng](const BiSet& s, const BiSet& t) -> std::optional<BiMap> {
    auto maps = hom_enum<2>(s, t);
    if (maps.empty()) return std::nullopt;
    return maps[std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng)];
  };
  while (true) {
    ChainOverB c;
    c.base = disc(pick(bases));
    c.objects.assign(static_cast<std::size_t>(m) + 1, nullptr);
    c.to_base.resize(static_cast<std::size_t>(m) + 1);
    c.maps.resize(static_cast<std::size_t>(m));
    bool ok = true;
    for (int j = m; j >= 0 && ok; --j) {
      const auto ju = static_cast<std::size_t>(j);
      c.objects[ju] = disc(pick(pool));
      if (j == m) {
        auto p = random_map(c.objects[ju], c.base);
        if (!p) ok = false;
        else c.to_base[ju] = *p;
      } else {
        auto f = random_map(c.objects[ju], c.objects[ju + 1]);
        if (!f) ok = false;
        else {
          c.maps[ju] = *f;
          c.to_base[ju] = compose(c.to_base[ju + 1], *f);
        }
      }
    }
    if (!ok) continue;
    c.validate();
    return c;
  }
}

}  // namespace segalkit
