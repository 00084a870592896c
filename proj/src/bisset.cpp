#include "segalkit/bisset.hpp"

namespace segalkit {

namespace {

std::vector<bool> all_but_top(const FinBiSet& b) {
  std::vector<bool> keep(b.size(), true);
  if (!keep.empty()) keep.back() = false;
  return keep;
}

BiSet embed(const SSet& x, std::size_t axis) {
  std::vector<Generator<2>> gens;
  for (auto& g : x->generators()) {
    Generator<2> h;
    h.label = g.label;
    h.degree = {0, 0};
    h.degree[axis] = g.degree[0];
    for (auto& f : g.faces[0]) {
      BiCell c;
      c.gen = f.gen;
      c.epis[axis] = f.epis[0];
      c.epis[1 - axis] = OrdinalMap::identity(0);
      h.faces[axis].push_back(c);
    }
    gens.push_back(std::move(h));
  }
  return make_cellset<2>(std::move(gens), false);
}

LevelKey single(std::size_t v) { return LevelKey{static_cast<std::int64_t>(v)}; }

}  // namespace

BiSet box(int n, int m) {
  if (n < 0 || m < 0) throw RangeError("box: negative index");
  return standard_cells<2>({n, m});
}

BiSet boundary_box(int n, int m) {
  auto b = box(n, m);
  return subobject<2>(b, all_but_top(*b)).object;
}

BiSet F(int n) { return box(n, 0); }

BiSet dF(int n) { return boundary_box(n, 0); }

BiSet Fhorn(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw RangeError("Fhorn: need n >= 1 and 0 <= i <= n");
  auto b = F(n);
  std::vector<bool> keep(b->size(), false);
  for (std::uint32_t g = 0; g < b->size(); ++g) {
    auto alpha = standard_arrow<2>(*b, {n, 0}, b->generator_cell(g))[0];
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int k = 0; k <= alpha.dom(); ++k) hit[static_cast<std::size_t>(alpha(k))] = true;
    for (int j = 0; j <= n; ++j)
      if (j != i && !hit[static_cast<std::size_t>(j)]) keep[g] = true;
  }
  return subobject<2>(b, keep).object;
}

BiMap box_inclusion(const BiSet& sub, int n, int m) {
  auto b = box(n, m);
  std::vector<BiCell> a;
  for (auto& g : sub->generators()) {
    auto idx = b->find_label(g.label);
    if (!idx) throw std::invalid_argument("box_inclusion: not a subobject of box[n,m]");
    a.push_back(b->generator_cell(*idx));
  }
  return BiMap(sub, b, std::move(a));
}

BiMap box_map(int n, int m, int n2, int m2, const BiOrdinalMap& tau) {
  return standard_map<2>(box(n, m), {n, m}, box(n2, m2), {n2, m2}, tau);
}

BiCell box_cell(const FinBiSet& b, int n, int m, const BiOrdinalMap& tau) {
  return standard_cell<2>(b, {n, m}, tau);
}

BiSet disc(const SSet& x) { return embed(x, 0); }

BiMap disc(const SSetMap& f, const BiSet& source, const BiSet& target) {
  std::vector<BiCell> a;
  for (auto& c : f.assignment()) {
    BiCell b;
    b.gen = c.gen;
    b.epis = {c.epis[0], OrdinalMap::identity(0)};
    a.push_back(b);
  }
  return BiMap(source, target, std::move(a), false);
}

BiSet constant(const SSet& x) { return embed(x, 1); }

// ---------------------------------------------------------------------------

Slice::Slice(BiSet x, std::size_t frozen_axis, int index, std::optional<int> max_level)
    : x_(std::move(x)), axis_(frozen_axis), index_(index) {
  if (axis_ > 1) throw RangeError("slice: axis must be 0 or 1");
  if (index_ < 0) throw RangeError("slice: negative index");
  const std::size_t free_axis = 1 - axis_;
  int top = max_level.value_or(std::max(0, x_->dimension()[free_axis]));
  LevelOracle<1> oracle;
  oracle.elements = [this](const Degree<1>& d) {
    std::vector<LevelKey> out;
    auto n = x_->cells(degree_at(d[0])).size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(single(i));
    return out;
  };
  oracle.act = [this, free_axis](const MultiOrdinal<1>& tau, const LevelKey& key) {
    const BiCell& c = x_->cells(degree_at(tau[0].cod()))[static_cast<std::size_t>(key[0])];
    BiOrdinalMap t;
    t[axis_] = OrdinalMap::identity(index_);
    t[free_axis] = tau[0];
    return single(*x_->cell_index(x_->apply(t, c)));
  };
  oracle.label = [this](const Degree<1>& d, const LevelKey& key) {
    return x_->cell_label(x_->cells(degree_at(d[0]))[static_cast<std::size_t>(key[0])]);
  };
  norm_ = normalize<1>(oracle, {top}, top);
}

Degree<2> Slice::degree_at(int k) const {
  Degree<2> d;
  d[axis_] = index_;
  d[1 - axis_] = k;
  return d;
}

Simplex Slice::simplex_of(const BiCell& c) const {
  auto d = c.degree();
  if (d[axis_] != index_) throw std::invalid_argument("slice: cell has the wrong frozen index");
  auto idx = x_->cell_index(c);
  if (!idx) throw std::invalid_argument("slice: unknown cell");
  return norm_.lookup({d[1 - axis_]}, single(*idx));
}

BiCell Slice::cell_of(const Simplex& s) const {
  const auto& key = norm_.generator_key[s.gen];
  const int k = norm_.object->generator(s.gen).degree[0];
  const BiCell& g = x_->cells(degree_at(k))[static_cast<std::size_t>(key[0])];
  BiOrdinalMap t;
  t[axis_] = OrdinalMap::identity(index_);
  t[1 - axis_] = s.epis[0];
  return x_->apply(t, g);
}

Slice row(const BiSet& x, int n, std::optional<int> max_level) { return Slice(x, 0, n, max_level); }

Slice column(const BiSet& x, int m, std::optional<int> max_level) { return Slice(x, 1, m, max_level); }

SSetMap slice_map(const Slice& from, const Slice& to, const OrdinalMap& tau) {
  if (from.frozen_axis() != to.frozen_axis() || tau.dom() != to.index() || tau.cod() != from.index()) {
    throw std::invalid_argument("slice_map: arrow does not connect the slices");
  }
  std::vector<Simplex> a;
  const auto axis = from.frozen_axis();
  for (std::uint32_t g = 0; g < from.object()->size(); ++g) {
    BiCell c = from.cell_of(from.object()->generator_cell(g));
    BiOrdinalMap t;
    t[axis] = tau;
    t[1 - axis] = OrdinalMap::identity(c.degree()[1 - axis]);
    a.push_back(to.simplex_of(from.source()->apply(t, c)));
  }
  return SSetMap(from.object(), to.object(), std::move(a), false);
}

// ---------------------------------------------------------------------------

Reindexed::Reindexed(DeltaFunctor phi, BiSet x, std::optional<int> max_first)
    : phi_(std::move(phi)), x_(std::move(x)) {
  auto dim = x_->dimension();
  if (x_->empty()) {
    bound_ = 0;
  } else if (max_first) {
    bound_ = *max_first;
  } else if (phi_.nondegenerate_bound) {
    bound_ = phi_.nondegenerate_bound(dim[0]);
  } else {
    throw std::invalid_argument("reindex: functor without a known bound needs an explicit truncation");
  }
  LevelOracle<2> oracle;
  oracle.elements = [this](const Degree<2>& d) {
    std::vector<LevelKey> out;
    auto n = x_->cells({phi_.on_objects(d[0]), d[1]}).size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(single(i));
    return out;
  };
  oracle.act = [this](const BiOrdinalMap& tau, const LevelKey& key) {
    const BiCell& c = x_->cells({phi_.on_objects(tau[0].cod()), tau[1].cod()})[static_cast<std::size_t>(key[0])];
    return single(*x_->cell_index(x_->apply({phi_.on_arrows(tau[0]), tau[1]}, c)));
  };
  oracle.label = [this](const Degree<2>& d, const LevelKey& key) {
    return x_->cell_label(x_->cells({phi_.on_objects(d[0]), d[1]})[static_cast<std::size_t>(key[0])]);
  };
  norm_ = normalize<2>(oracle, {bound_, std::max(0, dim[1])}, bound_ + std::max(0, dim[1]));
}

BiCell Reindexed::cell_of(int n, const BiCell& c) const {
  auto d = c.degree();
  if (d[0] != phi_.on_objects(n)) throw std::invalid_argument("reindex: cell has the wrong level");
  auto idx = x_->cell_index(c);
  if (!idx) throw std::invalid_argument("reindex: unknown cell");
  return norm_.lookup({n, d[1]}, single(*idx));
}

BiCell Reindexed::source_cell(const BiCell& c) const {
  const auto& g = norm_.object->generator(c.gen);
  const BiCell& base =
      x_->cells({phi_.on_objects(g.degree[0]), g.degree[1]})[static_cast<std::size_t>(norm_.generator_key[c.gen][0])];
  return x_->apply({phi_.on_arrows(c.epis[0]), c.epis[1]}, base);
}

Reindexed opposite(const BiSet& x, std::optional<int> max_first) {
  return Reindexed(DeltaFunctor::opposite(), x, max_first);
}

Reindexed twisted(const BiSet& x, std::optional<int> max_first) {
  return Reindexed(DeltaFunctor::twist(), x, max_first);
}

TwistProjection twist_projection(const BiSet& x, std::optional<int> max_first) {
  TwistProjection out;
  out.twisted = std::make_shared<Reindexed>(twisted(x, max_first));
  const int bound = out.twisted->first_bound();
  out.opposite = std::make_shared<Reindexed>(opposite(x, bound));
  out.product = std::make_shared<Product<2>>(out.opposite->object(), x, bound + std::max(0, x->dimension()[1]));
  const auto& tw = *out.twisted->object();
  std::vector<BiCell> a;
  for (std::uint32_t g = 0; g < tw.size(); ++g) {
    BiCell w = out.twisted->source_cell(tw.generator_cell(g));
    const int n = tw.generator(g).degree[0];
    const int m = tw.generator(g).degree[1];
    auto id_m = OrdinalMap::identity(m);
    BiCell op_part = x->apply({shift(0, n, 2 * n + 1), id_m}, w);
    BiCell x_part = x->apply({shift(n + 1, n, 2 * n + 1), id_m}, w);
    a.push_back(out.product->pair(out.opposite->cell_of(n, op_part), x_part));
  }
  out.map = BiMap(out.twisted->object(), out.product->object(), std::move(a), false);
  return out;
}

Subobject<2> bis_skeleton(const BiSet& x, int n) { return skeleton<2>(x, n); }

namespace {

/// The map out of a coproduct given on each part.
BiMap copair(const Coproduct<2>& c, const std::vector<BiMap>& legs, const BiSet& target) {
  std::vector<BiCell> a(c.object->size());
  for (std::size_t p = 0; p < legs.size(); ++p)
    for (std::uint32_t g = 0; g < legs[p].source().size(); ++g)
      a[c.inclusions[p].assignment()[g].gen] = legs[p].assignment()[g];
  return BiMap(c.object, target, std::move(a));
}

}  // namespace

BiMap reindex_map(const Reindexed& from, const Reindexed& to, const BiMap& f) {
  if (f.source_ptr() != from.source() || f.target_ptr() != to.source())
    throw std::invalid_argument("reindex_map: map does not match the reindexed objects");
  const auto& x = *from.object();
  std::vector<BiCell> a;
  for (std::uint32_t g = 0; g < x.size(); ++g) {
    BiCell c = x.generator_cell(g);
    a.push_back(to.cell_of(x.generator(g).degree[0], f.image(from.source_cell(c))));
  }
  return BiMap(from.object(), to.object(), std::move(a));
}

SkeletonPushout skeleton_pushout(const BiSet& x, int n) {
  if (n < 0) throw RangeError("skeleton_pushout: n < 0");
  SkeletonPushout out;
  out.previous = bis_skeleton(x, n - 1);
  out.current = bis_skeleton(x, n);
  const BiSet& sk = out.current.object;
  std::vector<BiSet> boxes, boundaries;
  std::vector<BiMap> attach, fill, incl;
  for (std::uint32_t g = 0; g < sk->size(); ++g) {
    auto d = sk->generator(g).degree;
    if (total<2>(d) != n) continue;
    out.cells.push_back(g);
    auto b = box(d[0], d[1]);
    auto bd = boundary_box(d[0], d[1]);
    BiMap chi = characteristic_map<2>(b, sk, sk->generator_cell(g));
    BiMap in = box_inclusion(bd, d[0], d[1]);
    in = BiMap(bd, b, in.assignment());
    // The boundary lands in sk_{n-1}.
    std::vector<BiCell> a;
    BiMap boundary = compose(chi, in);
    for (auto& c : boundary.assignment()) {
      BiCell moved = c;
      moved.gen = *out.previous.index[out.current.inclusion.assignment()[c.gen].gen];
      a.push_back(moved);
    }
    boxes.push_back(b);
    boundaries.push_back(bd);
    attach.emplace_back(bd, out.previous.object, std::move(a));
    fill.push_back(chi);
    incl.push_back(in);
  }
  auto cb = coproduct<2>(boundaries);
  auto cx = coproduct<2>(boxes);
  std::vector<BiMap> incl_legs, attach_legs, fill_legs;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    incl_legs.push_back(compose(cx.inclusions[i], incl[i]));
    attach_legs.push_back(attach[i]);
    fill_legs.push_back(fill[i]);
  }
  Pushout<2> p(copair(cb, attach_legs, out.previous.object), copair(cb, incl_legs, cx.object));
  out.glued = p.object();
  std::vector<BiCell> up;
  for (std::uint32_t g = 0; g < out.previous.object->size(); ++g) {
    BiCell c = out.previous.inclusion.assignment()[g];
    c.gen = *out.current.index[c.gen];
    up.push_back(c);
  }
  out.comparison = p.induced(BiMap(out.previous.object, sk, std::move(up)), copair(cx, fill_legs, sk));
  out.isomorphism = is_isomorphism<2>(out.comparison);
  return out;
}

std::map<Degree<2>, std::vector<std::uint32_t>> nondegenerate(const FinBiSet& x) {
  std::map<Degree<2>, std::vector<std::uint32_t>> out;
  for (std::uint32_t g = 0; g < x.size(); ++g) out[x.generator(g).degree].push_back(g);
  return out;
}

TauDecomposition tau_decompose(const BiMap& p, const Product<2>& target, int m, int n) {
  if (p.target_ptr() != target.object()) throw std::invalid_argument("tau_decompose: map does not land in the product");
  const auto& fm = target.second().target();
  if (fm.dimension() != Degree<2>{m, 0} || fm.size() != F(m)->size()) {
    throw std::invalid_argument("tau_decompose: second factor is not F[m]");
  }
  TauDecomposition out;
  out.row = std::make_shared<Slice>(row(p.source_ptr(), n));
  out.base_row = std::make_shared<Slice>(row(target.first().target_ptr(), n));
  const auto& r = *out.row->object();
  std::vector<OrdinalMap> tau_of(r.size());
  for (std::uint32_t g = 0; g < r.size(); ++g) {
    BiCell c = out.row->cell_of(r.generator_cell(g));
    BiCell image = p.image(c);
    BiCell f = target.second().image(image);
    tau_of[g] = standard_arrow<2>(fm, {m, 0}, f)[0];
  }
  for (auto& tau : enumerate_maps(n, m)) {
    std::vector<bool> keep(r.size());
    for (std::uint32_t g = 0; g < r.size(); ++g) keep[g] = tau_of[g] == tau;
    auto piece = subobject<1>(out.row->object(), keep);
    std::vector<Simplex> a;
    for (std::uint32_t g = 0; g < piece.object->size(); ++g) {
      BiCell c = out.row->cell_of(piece.inclusion.assignment()[g]);
      a.push_back(out.base_row->simplex_of(target.first().image(p.image(c))));
    }
    SSetMap to_base(piece.object, out.base_row->object(), std::move(a), false);
    out.pieces.push_back({tau, std::move(piece), std::move(to_base)});
  }
  return out;
}

}  // namespace segalkit
