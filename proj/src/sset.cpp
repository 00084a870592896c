#include "segalkit/sset.hpp"

#include <algorithm>
#include <numeric>

namespace segalkit {

SSet standard(int n) {
  if (n < 0) throw RangeError("standard: negative dimension");
  return standard_cells<1>({n});
}

SSet boundary(int n) {
  if (n < 0) throw RangeError("boundary: negative dimension");
  auto d = standard(n);
  std::vector<bool> keep(d->size(), true);
  keep.back() = false;
  return subobject<1>(d, keep).object;
}

SSet horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw RangeError("horn: need n >= 1 and 0 <= k <= n");
  auto d = standard(n);
  std::vector<bool> keep(d->size());
  for (std::uint32_t g = 0; g < d->size(); ++g) {
    auto tau = standard_arrow<1>(*d, {n}, d->generator_cell(g))[0];
    // kept iff the image misses some vertex other than k
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i <= tau.dom(); ++i) hit[static_cast<std::size_t>(tau(i))] = true;
    for (int j = 0; j <= n; ++j)
      if (j != k && !hit[static_cast<std::size_t>(j)]) keep[g] = true;
  }
  return subobject<1>(d, keep).object;
}

SSetMap standard_inclusion(const SSet& sub, int n) {
  auto d = standard(n);
  std::vector<Simplex> a;
  for (auto& g : sub->generators()) {
    auto idx = d->find_label(g.label);
    if (!idx) throw std::invalid_argument("standard_inclusion: not a subobject of Delta[n]");
    a.push_back(d->generator_cell(*idx));
  }
  return SSetMap(sub, d, std::move(a));
}

const std::vector<Simplex>& levels(const FinSSet& x, int n) { return x.cells({n}); }

Simplex apply(const FinSSet& x, const OrdinalMap& tau, const Simplex& s) { return x.apply({tau}, s); }

SSetMap standard_map(int n, int m, const OrdinalMap& tau) {
  return segalkit::standard_map<1>(standard(n), {n}, standard(m), {m}, {tau});
}

Simplex standard_simplex(const FinSSet& delta_m, int m, const OrdinalMap& tau) {
  return standard_cell<1>(delta_m, {m}, {tau});
}

int Components::of(std::uint32_t vertex) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end() || *it != vertex) throw std::invalid_argument("pi0: not a vertex");
  return component[static_cast<std::size_t>(it - vertices.begin())];
}

Components pi0(const FinSSet& x) {
  Components c;
  c.vertices = vertices(x);
  c.component = vertex_components(x);
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (static_cast<std::size_t>(c.component[i]) == c.representative.size()) c.representative.push_back(c.vertices[i]);
  return c;
}

std::vector<int> pi0_map(const SSetMap& f) {
  auto src = pi0(f.source());
  auto tgt = pi0(f.target());
  std::vector<int> out(src.count());
  for (std::size_t k = 0; k < src.count(); ++k) out[k] = tgt.of(f.assignment()[src.representative[k]].gen);
  return out;
}

std::vector<SSetMap> map_space_level(const SSet& y, const SSet& x, int n) {
  Product<1> p(y, standard(n));
  return hom_enum<1>(p.object(), x);
}

std::vector<SSetMap> map_space_over(const SSetMap& py, const SSetMap& px, int n) {
  Product<1> p(py.source_ptr(), standard(n));
  SSetMap base = compose(py, p.first());
  HomConstraints<1> cons;
  cons.over = &px;
  cons.over_base = &base;
  return hom_enum<1>(p.object(), px.source_ptr(), cons);
}

bool homotopic_over(const SSetMap& px, const SSetMap& py, const SSetMap& f, const SSetMap& g) {
  if (f.source_ptr() != px.source_ptr() || g.source_ptr() != px.source_ptr() ||
      f.target_ptr() != py.source_ptr() || g.target_ptr() != py.source_ptr()) {
    throw std::invalid_argument("homotopic_over: maps do not share the given source and target");
  }
  if (compose(py, f).assignment() != px.assignment() || compose(py, g).assignment() != px.assignment()) {
    throw std::invalid_argument("homotopic_over: maps are not over the base");
  }
  if (f.assignment() == g.assignment()) return true;
  HomConstraints<1> cons;
  cons.over = &py;
  cons.over_base = &px;
  auto vertices_ = hom_enum<1>(px.source_ptr(), py.source_ptr(), cons);
  std::map<std::vector<Simplex>, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) index.emplace(vertices_[i].assignment(), i);

  Product<1> cyl(px.source_ptr(), standard(1));
  SSetMap base = compose(px, cyl.first());
  HomConstraints<1> over;
  over.over = &py;
  over.over_base = &base;
  auto d1 = standard(1);
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::array<SSetMap, 2> ends;
  for (int e = 0; e < 2; ++e) {
    std::vector<Simplex> a;
    for (std::uint32_t gx = 0; gx < px.source().size(); ++gx) {
      Simplex c = px.source().generator_cell(gx);
      std::vector<int> vals(static_cast<std::size_t>(c.epis[0].dom()) + 1, e);
      Simplex v = standard_simplex(*d1, 1, OrdinalMap(1, vals));
      a.push_back(cyl.pair(c, v));
    }
    ends[static_cast<std::size_t>(e)] = SSetMap(px.source_ptr(), cyl.object(), std::move(a), false);
  }
  for_each_map<1>(*cyl.object(), *py.source_ptr(), over, [&](const std::vector<Simplex>& h) {
    SSetMap hm(cyl.object(), py.source_ptr(), h, false);
    auto a = index.at(compose(hm, ends[0]).assignment());
    auto b = index.at(compose(hm, ends[1]).assignment());
    parent[find(a)] = find(b);
    return true;
  });
  return find(index.at(f.assignment())) == find(index.at(g.assignment()));
}

bool isomorphic(const SSet& x, const SSet& y) { return find_isomorphism<1>(x, y).has_value(); }

}  // namespace segalkit
