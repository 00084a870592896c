#include "segalkit/lifting.hpp"

#include <unordered_set>

namespace segalkit {

namespace {

template <std::size_t K>
std::string labels(const CellSet<K>& x, const std::vector<Cell<K>>& cells) {
  std::string s = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? ", " : "") + x.cell_label(cells[i]);
  return s + "]";
}

template <std::size_t K>
bool same_assignment(const CellMap<K>& f, const CellMap<K>& g) {
  return f.assignment() == g.assignment();
}

template <std::size_t K>
std::vector<Cell<K>> identity_assignment(const CellSet<K>& x) {
  std::vector<Cell<K>> a;
  for (std::uint32_t g = 0; g < x.size(); ++g) a.push_back(x.generator_cell(g));
  return a;
}

/// Fixed assignments forcing c o i = a, when i sends generators to
/// distinct generators; empty otherwise.
template <std::size_t K>
std::optional<std::vector<std::optional<Cell<K>>>> fixed_from(const CellMap<K>& i, const CellMap<K>& a) {
  if (!i.is_injective_on_generators()) return std::nullopt;
  std::vector<std::optional<Cell<K>>> fixed(i.target().size());
  for (std::uint32_t g = 0; g < i.assignment().size(); ++g) fixed[i.assignment()[g].gen] = a.assignment()[g];
  return fixed;
}

bool is_surjective_arrow(const OrdinalMap& t) { return t.is_surjective(); }

bool misses_other_than(const OrdinalMap& t, int i) {
  std::vector<bool> hit(static_cast<std::size_t>(t.cod()) + 1, false);
  for (int k = 0; k <= t.dom(); ++k) hit[static_cast<std::size_t>(t(k))] = true;
  for (int j = 0; j <= t.cod(); ++j)
    if (j != i && !hit[static_cast<std::size_t>(j)]) return true;
  return false;
}

template <std::size_t K>
CellSetPtr<K> standard_sub(const Degree<K>& top,
                           const std::function<bool(const MultiOrdinal<K>&)>& keep_arrow) {
  auto s = standard_cells<K>(top);
  std::vector<bool> keep(s->size());
  for (std::uint32_t g = 0; g < s->size(); ++g) keep[g] = keep_arrow(standard_arrow<K>(*s, top, s->generator_cell(g)));
  return subobject<K>(s, keep).object;
}

std::string member_name(const char* kind, std::initializer_list<int> args) {
  std::string s = std::string(kind) + "(";
  bool first = true;
  for (int a : args) {
    s += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return s + ")";
}

// --------------------------------------------------------------------------
// Levelwise lifting against Lambda^i[k] or the boundary of Delta[k] for a
// map q : X_n -> T where T is a set of cell tuples levelwise, faces taken
// along the second axis componentwise.

using Tuple = std::vector<BiCell>;

struct LevelwiseMap {
  const FinBiSet* x = nullptr;
  int n = 0;
  /// Objects owning each component of a target tuple.
  std::vector<const FinBiSet*> owners;
  std::function<std::vector<Tuple>(int k)> target_level;
  std::function<Tuple(const BiCell&)> q;
};

Tuple tuple_face(const LevelwiseMap& lm, const Tuple& t, int j) {
  Tuple out;
  out.reserve(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) out.push_back(lm.owners[r]->face(t[r], 1, j));
  return out;
}

/// i < 0 selects the boundary. Returns false on the first unfillable square.
bool lift_level(const LevelwiseMap& lm, int k, int i, std::size_t& squares, std::string& cert) {
  const FinBiSet& x = *lm.x;
  std::vector<int> positions;
  for (int j = 0; j <= k && k > 0; ++j)
    if (j != i) positions.push_back(j);

  std::unordered_set<Tuple, CellVectorHash<2>> image;
  for (auto& c : x.cells({lm.n, k})) {
    Tuple key = lm.q(c);
    for (int j : positions) key.push_back(x.face(c, 1, j));
    image.insert(std::move(key));
  }
  std::unordered_map<Tuple, std::vector<Tuple>, CellVectorHash<2>> targets;
  for (auto& v : lm.target_level(k)) {
    Tuple key;
    for (int j : positions) {
      auto f = tuple_face(lm, v, j);
      key.insert(key.end(), f.begin(), f.end());
    }
    targets[key].push_back(v);
  }
  const std::vector<BiCell> empty;
  const auto& lower = k > 0 ? x.cells({lm.n, k - 1}) : empty;
  Tuple chosen(positions.size());
  bool ok = true;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (!ok) return;
    if (pos == positions.size()) {
      Tuple key;
      for (auto& e : chosen) {
        auto qe = lm.q(e);
        key.insert(key.end(), qe.begin(), qe.end());
      }
      auto it = targets.find(key);
      if (it == targets.end()) return;
      for (auto& v : it->second) {
        ++squares;
        Tuple probe = v;
        probe.insert(probe.end(), chosen.begin(), chosen.end());
        if (!image.count(probe)) {
          ok = false;
          std::string s = "n=" + std::to_string(lm.n) + " k=" + std::to_string(k) +
                          (i < 0 ? " boundary" : " horn " + std::to_string(i)) + ": target [";
          for (std::size_t r = 0; r < v.size(); ++r) s += (r ? ", " : "") + lm.owners[r]->cell_label(v[r]);
          s += "], faces " + labels<2>(x, chosen);
          cert = s;
          return;
        }
      }
      return;
    }
    const int b = positions[pos];
    for (auto& e : lower) {
      bool compatible = true;
      for (std::size_t prev = 0; k >= 2 && prev < pos && compatible; ++prev) {
        const int a = positions[prev];
        if (!(x.face(e, 1, a) == x.face(chosen[prev], 1, b - 1))) compatible = false;
      }
      if (!compatible) continue;
      chosen[pos] = e;
      rec(pos + 1);
      if (!ok) return;
    }
  };
  rec(0);
  return ok;
}

/// Tuples (y, z_0, ..., z_n) of the matching object Y_n x_{Y_dn} X_dn at level k.
std::vector<Tuple> matching_level(const BiMap& p, int n, int k) {
  const auto& x = p.source();
  const auto& y = p.target();
  std::vector<Tuple> out;
  if (n == 0) {
    for (auto& c : y.cells({0, k})) out.push_back({c});
    return out;
  }
  std::unordered_map<BiCell, std::vector<BiCell>, CellHash<2>> by_image;
  for (auto& z : x.cells({n - 1, k})) by_image[p.image(z)].push_back(z);
  for (auto& yc : y.cells({n, k})) {
    Tuple t{yc};
    std::function<void(int)> rec = [&](int j) {
      if (j > n) {
        out.push_back(t);
        check_budget(out.size(), "matching object level");
        return;
      }
      auto it = by_image.find(y.face(yc, 0, j));
      if (it == by_image.end()) return;
      for (auto& z : it->second) {
        bool ok = true;
        for (int a = 0; n >= 2 && a < j && ok; ++a)
          if (!(x.face(z, 0, a) == x.face(t[static_cast<std::size_t>(a) + 1], 0, j - 1))) ok = false;
        if (!ok) continue;
        t.push_back(z);
        rec(j + 1);
        t.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace

template <std::size_t K>
LiftingProblem<K>::LiftingProblem(CellMap<K> i_, CellMap<K> p_, CellMap<K> a_, CellMap<K> b_)
    : i(std::move(i_)), p(std::move(p_)), a(std::move(a_)), b(std::move(b_)) {
  if (compose(p, a).assignment() != compose(b, i).assignment()) {
    throw std::invalid_argument("lifting problem: square does not commute");
  }
}

template <std::size_t K>
std::vector<CellMap<K>> lifts(const LiftingProblem<K>& problem) {
  HomConstraints<K> cons;
  cons.over = &problem.p;
  cons.over_base = &problem.b;
  if (auto fixed = fixed_from(problem.i, problem.a)) cons.fixed = *fixed;
  std::vector<CellMap<K>> out;
  for_each_map<K>(problem.i.target(), problem.p.source(), cons, [&](const std::vector<Cell<K>>& c) {
    CellMap<K> m(problem.i.target_ptr(), problem.p.source_ptr(), c, false);
    if (compose(m, problem.i).assignment() == problem.a.assignment()) out.push_back(std::move(m));
    return true;
  });
  return out;
}

template <std::size_t K>
RlpResult has_rlp(const CellMap<K>& i, const CellMap<K>& p) {
  RlpResult r;
  const auto& A = i.source();
  const auto& B = i.target();
  const auto& X = p.source();
  const auto& Y = p.target();
  for_each_map<K>(A, X, {}, [&](const std::vector<Cell<K>>& a) {
    CellMap<K> am(i.source_ptr(), p.source_ptr(), a, false);
    auto pa = compose(p, am);
    HomConstraints<K> bcons;
    if (auto fixed = fixed_from(i, pa)) bcons.fixed = *fixed;
    for_each_map<K>(B, Y, bcons, [&](const std::vector<Cell<K>>& b) {
      CellMap<K> bm(i.target_ptr(), p.target_ptr(), b, false);
      if (compose(bm, i).assignment() != pa.assignment()) return true;
      ++r.squares;
      LiftingProblem<K> prob(i, p, am, bm);
      HomConstraints<K> cons;
      cons.over = &p;
      cons.over_base = &bm;
      if (auto fixed = fixed_from(i, am)) cons.fixed = *fixed;
      bool found = false;
      for_each_map<K>(B, X, cons, [&](const std::vector<Cell<K>>& c) {
        CellMap<K> cm(i.target_ptr(), p.source_ptr(), c, false);
        if (compose(cm, i).assignment() == a) {
          found = true;
          return false;
        }
        return true;
      });
      if (!found) {
        r.holds = false;
        r.certificate = "a = " + labels<K>(X, a) + ", b = " + labels<K>(Y, b);
        return false;
      }
      return true;
    });
    return r.holds;
  });
  return r;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::KanHorn: return "kan-horn";
    case Family::KanBoundary: return "kan-boundary";
    case Family::Reedy: return "reedy";
    case Family::ReedyTrivial: return "reedy-trivial";
    case Family::Left: return "left";
  }
  return "unknown";
}

template <std::size_t K>
std::vector<FamilyMember<K>> family_members(Family family, int bound) {
  std::vector<FamilyMember<K>> out;
  if (bound < 1) throw RangeError("family bound must be at least 1");
  if constexpr (K == 1) {
    if (family == Family::KanHorn) {
      for (int n = 1; n <= bound; ++n)
        for (int k = 0; k <= n; ++k) out.push_back({member_name("horn", {n, k}), {n}, horn(n, k)});
    } else if (family == Family::KanBoundary) {
      for (int n = 0; n <= bound; ++n) out.push_back({member_name("boundary", {n}), {n}, boundary(n)});
    } else {
      throw std::invalid_argument("family " + family_name(family) + " is bisimplicial");
    }
  } else {
    if (family == Family::Reedy) {
      for (int n = 0; n <= bound; ++n)
        for (int m = 1; n + m <= bound; ++m)
          for (int i = 0; i <= m; ++i) {
            auto sub = standard_sub<2>({n, m}, [i](const BiOrdinalMap& t) {
              return !is_surjective_arrow(t[0]) || misses_other_than(t[1], i);
            });
            out.push_back({member_name("reedy", {n, m, i}), {n, m}, sub});
          }
    } else if (family == Family::ReedyTrivial) {
      for (int n = 0; n <= bound; ++n)
        for (int m = 0; n + m <= bound; ++m)
          out.push_back({member_name("boundary_box", {n, m}), {n, m}, boundary_box(n, m)});
    } else if (family == Family::Left) {
      for (int n = 1; n <= bound; ++n)
        for (int m = 0; n + m <= bound; ++m) {
          auto sub = standard_sub<2>({n, m}, [](const BiOrdinalMap& t) {
            bool initial_vertex = t[0].dom() == 0 && t[0](0) == 0;
            return !is_surjective_arrow(t[1]) || initial_vertex;
          });
          out.push_back({member_name("left", {n, m}), {n, m}, sub});
        }
    } else {
      throw std::invalid_argument("family " + family_name(family) + " is simplicial");
    }
  }
  return out;
}

template <std::size_t K>
RlpResult has_rlp_member(const CellMap<K>& p, const FamilyMember<K>& member) {
  RlpResult r;
  const auto& X = p.source();
  const auto& Y = p.target();
  const auto& A = *member.sub;
  auto full = standard_cells<K>(member.top);
  std::vector<MultiOrdinal<K>> arrows;
  for (auto& g : A.generators()) {
    auto idx = full->find_label(g.label);
    if (!idx) throw InvariantViolation("family member is not a subobject of its standard object");
    arrows.push_back(standard_arrow<K>(*full, member.top, full->generator_cell(*idx)));
  }
  auto restrict_to_a = [&](const CellSet<K>& z, const Cell<K>& c) {
    std::vector<Cell<K>> v;
    v.reserve(arrows.size());
    for (auto& t : arrows) v.push_back(z.apply(t, c));
    return v;
  };
  std::unordered_set<std::vector<Cell<K>>, CellVectorHash<K>> image;
  for (auto& c : X.cells(member.top)) {
    auto v = restrict_to_a(X, c);
    v.push_back(p.image(c));
    image.insert(std::move(v));
  }
  std::unordered_map<std::vector<Cell<K>>, std::vector<Cell<K>>, CellVectorHash<K>> by_restriction;
  for (auto& b : Y.cells(member.top)) by_restriction[restrict_to_a(Y, b)].push_back(b);

  for_each_map<K>(A, X, {}, [&](const std::vector<Cell<K>>& a) {
    std::vector<Cell<K>> pa;
    pa.reserve(a.size());
    for (auto& c : a) pa.push_back(p.image(c));
    auto it = by_restriction.find(pa);
    if (it == by_restriction.end()) return true;
    for (auto& b : it->second) {
      ++r.squares;
      auto probe = a;
      probe.push_back(b);
      if (!image.count(probe)) {
        r.holds = false;
        r.certificate = member.name + ": a = " + labels<K>(X, a) + ", b = " + Y.cell_label(b);
        return false;
      }
    }
    return true;
  });
  return r;
}

template <std::size_t K>
FamilyResult has_rlp_family(const CellMap<K>& p, Family family, int bound) {
  FamilyResult out;
  out.bound = bound;
  for (auto& member : family_members<K>(family, bound)) {
    auto r = has_rlp_member<K>(p, member);
    ++out.members;
    out.squares += r.squares;
    out.per_member.emplace_back(member.name, r.holds);
    if (!r.holds && out.holds) {
      out.holds = false;
      out.certificate = r.certificate;
    }
  }
  return out;
}

FamilyResult reedy_matching_route(const BiMap& p, int bound, bool trivial) {
  FamilyResult out;
  out.bound = bound;
  for (int n = 0; n <= bound; ++n) {
    LevelwiseMap lm;
    lm.x = &p.source();
    lm.n = n;
    lm.owners.push_back(&p.target());
    for (int j = 0; j <= n && n > 0; ++j) lm.owners.push_back(&p.source());
    lm.target_level = [&p, n](int k) { return matching_level(p, n, k); };
    lm.q = [&p, n](const BiCell& c) {
      Tuple t{p.image(c)};
      for (int j = 0; j <= n && n > 0; ++j) t.push_back(p.source().face(c, 0, j));
      return t;
    };
    for (int m = trivial ? 0 : 1; n + m <= bound; ++m) {
      for (int i = 0; i <= m; ++i) {
        std::string cert;
        bool ok = lift_level(lm, m, trivial ? -1 : i, out.squares, cert);
        ++out.members;
        out.per_member.emplace_back(trivial ? member_name("boundary_box", {n, m}) : member_name("reedy", {n, m, i}),
                                    ok);
        if (!ok && out.holds) {
          out.holds = false;
          out.certificate = cert;
        }
        if (trivial) break;
      }
    }
  }
  return out;
}

FamilyResult left_levelwise_route(const BiMap& p, int bound) {
  FamilyResult out;
  out.bound = bound;
  const auto& x = p.source();
  const auto& y = p.target();
  for (int n = 1; n <= bound; ++n) {
    const OrdinalMap initial(n, {0});
    LevelwiseMap lm;
    lm.x = &x;
    lm.n = n;
    lm.owners = {&x, &y};
    lm.target_level = [&, n, initial](int k) {
      std::vector<Tuple> level;
      std::unordered_map<BiCell, std::vector<BiCell>, CellHash<2>> by_image;
      for (auto& xc : x.cells({0, k})) by_image[p.image(xc)].push_back(xc);
      auto id_k = OrdinalMap::identity(k);
      for (auto& yc : y.cells({n, k})) {
        auto it = by_image.find(y.apply({initial, id_k}, yc));
        if (it == by_image.end()) continue;
        for (auto& xc : it->second) level.push_back({xc, yc});
      }
      return level;
    };
    lm.q = [&, initial](const BiCell& c) {
      auto id_k = OrdinalMap::identity(c.degree()[1]);
      return Tuple{x.apply({initial, id_k}, c), p.image(c)};
    };
    for (int m = 0; n + m <= bound; ++m) {
      std::string cert;
      bool ok = lift_level(lm, m, -1, out.squares, cert);
      ++out.members;
      out.per_member.emplace_back(member_name("left", {n, m}), ok);
      if (!ok && out.holds) {
        out.holds = false;
        out.certificate = cert;
      }
    }
  }
  return out;
}

namespace {

template <std::size_t K>
bool complete_at(const CellMap<K>& p, int bound) {
  return std::max(p.source().total_dimension(), p.target().total_dimension()) <= bound - 1;
}

void agree(const FamilyResult& family, const FamilyResult& levelwise, const char* what) {
  if (family.per_member != levelwise.per_member) {
    std::string detail;
    for (std::size_t i = 0; i < std::min(family.per_member.size(), levelwise.per_member.size()); ++i) {
      if (family.per_member[i] != levelwise.per_member[i]) {
        detail = family.per_member[i].first + " family=" + (family.per_member[i].second ? "lifts" : "fails") +
                 " levelwise=" + (levelwise.per_member[i].second ? "lifts" : "fails");
        break;
      }
    }
    if (detail.empty()) detail = "member lists differ";
    throw InvariantViolation(std::string(what) + ": routes disagree at " + detail);
  }
}

Verdict verdict_from(const FamilyResult& r, int bound, bool complete) {
  Verdict v;
  v.holds = r.holds;
  v.bound = bound;
  v.complete = complete;
  v.certificate = r.certificate;
  return v;
}

}  // namespace

Verdict check_kan_fibration(const SSetMap& p, int bound) {
  return verdict_from(has_rlp_family<1>(p, Family::KanHorn, bound), bound, complete_at(p, bound));
}

Verdict check_trivial_fibration(const SSetMap& p, int bound) {
  return verdict_from(has_rlp_family<1>(p, Family::KanBoundary, bound), bound, complete_at(p, bound));
}

Verdict check_trivial_fibration(const BiMap& p, int bound) {
  auto family = has_rlp_family<2>(p, Family::ReedyTrivial, bound);
  agree(family, reedy_matching_route(p, bound, true), "trivial fibration");
  auto v = verdict_from(family, bound, complete_at(p, bound));
  v.extension = true;
  return v;
}

Verdict check_reedy_fibration(const BiMap& p, int bound) {
  auto family = has_rlp_family<2>(p, Family::Reedy, bound);
  agree(family, reedy_matching_route(p, bound, false), "Reedy fibration");
  return verdict_from(family, bound, complete_at(p, bound));
}

Verdict check_left_fibration(const BiMap& p, int bound) {
  auto reedy = has_rlp_family<2>(p, Family::Reedy, bound);
  auto left = has_rlp_family<2>(p, Family::Left, bound);
  agree(reedy, reedy_matching_route(p, bound, false), "left fibration (Reedy part)");
  agree(left, left_levelwise_route(p, bound), "left fibration (initial-vertex part)");
  FamilyResult both = reedy;
  both.members += left.members;
  both.squares += left.squares;
  if (both.holds && !left.holds) {
    both.holds = false;
    both.certificate = left.certificate;
  }
  return verdict_from(both, bound, complete_at(p, bound));
}

// ---------------------------------------------------------------------------

template <std::size_t K>
std::vector<RetractWitness<K>> retract_witnesses(const CellMap<K>& f, const CellMap<K>& g, std::size_t limit) {
  std::vector<RetractWitness<K>> out;
  auto sections = [](const CellSetPtr<K>& a, const CellSetPtr<K>& c) {
    std::vector<std::pair<CellMap<K>, CellMap<K>>> pairs;
    auto id = identity_assignment<K>(*a);
    auto ss = hom_enum<K>(a, c);
    auto rs = hom_enum<K>(c, a);
    for (auto& s : ss)
      for (auto& r : rs)
        if (compose(r, s).assignment() == id) pairs.emplace_back(s, r);
    return pairs;
  };
  auto zero = sections(f.source_ptr(), g.source_ptr());
  if (zero.empty()) return out;
  auto one = sections(f.target_ptr(), g.target_ptr());
  for (auto& [s0, r0] : zero)
    for (auto& [s1, r1] : one) {
      if (compose(g, s0).assignment() != compose(s1, f).assignment()) continue;
      if (compose(f, r0).assignment() != compose(r1, g).assignment()) continue;
      out.push_back({s0, s1, r0, r1});
      if (limit && out.size() >= limit) return out;
    }
  return out;
}

template <std::size_t K>
std::optional<RetractWitness<K>> is_retract(const CellMap<K>& f, const CellMap<K>& g) {
  auto w = retract_witnesses<K>(f, g, 1);
  if (w.empty()) return std::nullopt;
  return w.front();
}

RetractDelta0 retract_delta0(int n) {
  if (n < 0) throw RangeError("retract_delta0: negative n");
  RetractDelta0 r;
  r.n = n;
  std::vector<int> first(static_cast<std::size_t>(n) + 2), second(static_cast<std::size_t>(n) + 2);
  first[0] = 0;
  second[0] = 0;
  for (int i = 1; i <= n + 1; ++i) {
    first[static_cast<std::size_t>(i)] = i - 1;
    second[static_cast<std::size_t>(i)] = 1;
  }
  r.alpha_first = OrdinalMap(n, first);
  r.alpha_second = OrdinalMap(1, second);
  for (int i = 0; i <= n; ++i) r.beta.push_back({0, i + 1});  // beta(i, 0) = 0, beta(i, 1) = i + 1
  auto beta = [&](int i, int j) { return r.beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  r.beta_alpha_identity = true;
  for (int i = 0; i <= n + 1; ++i)
    if (beta(r.alpha_first(i), r.alpha_second(i)) != i) r.beta_alpha_identity = false;
  r.alpha0_in_bottom = r.alpha_second(0) == 0;
  r.beta_bottom_zero = true;
  for (int i = 0; i <= n; ++i)
    if (beta(i, 0) != 0) r.beta_bottom_zero = false;
  return r;
}

RetractDelta0Maps retract_delta0_maps(int n) {
  auto r = retract_delta0(n);
  auto d0 = standard(0), dn = standard(n), dn1 = standard(n + 1), d1 = standard(1);
  RetractDelta0Maps out;
  out.prism = std::make_shared<Product<1>>(dn, d1);
  const auto& prism = *out.prism;
  out.f = segalkit::standard_map<1>(d0, {0}, dn1, {n + 1}, {OrdinalMap(n + 1, {0})});
  std::vector<Simplex> ga;
  for (std::uint32_t g = 0; g < dn->size(); ++g) {
    Simplex c = dn->generator_cell(g);
    std::vector<int> zeros(static_cast<std::size_t>(c.epis[0].dom()) + 1, 0);
    ga.push_back(prism.pair(c, standard_simplex(*d1, 1, OrdinalMap(1, zeros))));
  }
  out.g = SSetMap(dn, prism.object(), std::move(ga));
  auto& w = out.witness;
  w.s0 = segalkit::standard_map<1>(d0, {0}, dn, {n}, {OrdinalMap(n, {r.alpha_first(0)})});
  w.r0 = segalkit::standard_map<1>(dn, {n}, d0, {0}, {OrdinalMap(0, std::vector<int>(static_cast<std::size_t>(n) + 1, 0))});
  std::vector<Simplex> s1;
  for (std::uint32_t g = 0; g < dn1->size(); ++g) {
    auto tau = standard_arrow<1>(*dn1, {n + 1}, dn1->generator_cell(g))[0];
    s1.push_back(prism.pair(standard_simplex(*dn, n, compose(r.alpha_first, tau)),
                            standard_simplex(*d1, 1, compose(r.alpha_second, tau))));
  }
  w.s1 = SSetMap(dn1, prism.object(), std::move(s1));
  std::vector<Simplex> r1;
  for (std::uint32_t g = 0; g < prism.object()->size(); ++g) {
    Simplex c = prism.object()->generator_cell(g);
    auto a = standard_arrow<1>(*dn, {n}, prism.first().image(c))[0];
    auto b = standard_arrow<1>(*d1, {1}, prism.second().image(c))[0];
    std::vector<int> vals;
    for (int t = 0; t <= a.dom(); ++t) vals.push_back(r.beta[static_cast<std::size_t>(a(t))][static_cast<std::size_t>(b(t))]);
    r1.push_back(standard_simplex(*dn1, n + 1, OrdinalMap(n + 1, vals)));
  }
  w.r1 = SSetMap(prism.object(), dn1, std::move(r1));
  return out;
}

#define SEGALKIT_LIFTING(K)                                                                              \
  template struct LiftingProblem<K>;                                                                     \
  template std::vector<CellMap<K>> lifts<K>(const LiftingProblem<K>&);                                   \
  template RlpResult has_rlp<K>(const CellMap<K>&, const CellMap<K>&);                                   \
  template std::vector<FamilyMember<K>> family_members<K>(Family, int);                                  \
  template RlpResult has_rlp_member<K>(const CellMap<K>&, const FamilyMember<K>&);                       \
  template FamilyResult has_rlp_family<K>(const CellMap<K>&, Family, int);                               \
  template std::vector<RetractWitness<K>> retract_witnesses<K>(const CellMap<K>&, const CellMap<K>&,     \
                                                               std::size_t);                             \
  template std::optional<RetractWitness<K>> is_retract<K>(const CellMap<K>&, const CellMap<K>&);

SEGALKIT_LIFTING(1)
SEGALKIT_LIFTING(2)

#undef SEGALKIT_LIFTING

}  // namespace segalkit
