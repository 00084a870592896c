#include "segalkit/cellular.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_set>

namespace segalkit {

namespace {

std::atomic<std::size_t> g_max_cells{0};

std::size_t read_env_budget() {
  if (const char* env = std::getenv("SEGALKIT_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // smaller index stays root
  }
};

template <std::size_t K>
std::vector<Degree<K>> degrees_upto(const Degree<K>& max, int max_total) {
  std::vector<Degree<K>> out;
  Degree<K> d{};
  for (std::size_t a = 0; a < K; ++a)
    if (max[a] < 0) return out;
  while (true) {
    if (total(d) <= max_total) out.push_back(d);
    std::size_t a = 0;
    while (a < K) {
      if (d[a] < max[a]) {
        ++d[a];
        break;
      }
      d[a] = 0;
      ++a;
    }
    if (a == K) break;
  }
  std::stable_sort(out.begin(), out.end(), degree_less<K>);
  return out;
}

template <std::size_t K>
Degree<K> minus_unit(Degree<K> d, std::size_t axis) {
  --d[axis];
  return d;
}

template <std::size_t K>
MultiOrdinal<K> on_axis(const Degree<K>& d, std::size_t axis, const OrdinalMap& t) {
  MultiOrdinal<K> r = identity_multi<K>(d);
  r[axis] = t;
  return r;
}

/// Sorts generators canonically (stable) and rewrites face references.
template <std::size_t K>
void sort_generators(std::vector<Generator<K>>& gens) {
  std::vector<std::uint32_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return degree_less<K>(gens[a].degree, gens[b].degree);
  });
  bool sorted = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != i) sorted = false;
  if (sorted) return;
  std::vector<std::uint32_t> old_to_new(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) old_to_new[order[i]] = static_cast<std::uint32_t>(i);
  std::vector<Generator<K>> out;
  out.reserve(gens.size());
  for (auto o : order) {
    Generator<K> g = std::move(gens[o]);
    for (auto& axis : g.faces)
      for (auto& f : axis) {
        if (f.gen >= old_to_new.size()) throw std::invalid_argument("face references unknown generator");
        f.gen = old_to_new[f.gen];
      }
    out.push_back(std::move(g));
  }
  gens = std::move(out);
}

template <std::size_t K>
LevelKey restrict_key(std::uint32_t g, const MultiOrdinal<K>& inj) {
  LevelKey k{g};
  for (auto& m : inj) {
    k.push_back(m.cod());
    for (int i = 0; i <= m.dom(); ++i) k.push_back(m(i));
    k.push_back(-1);
  }
  return k;
}

std::string vertex_list_label(const OrdinalMap& inj) {
  std::string s;
  bool commas = inj.cod() >= 10;
  for (int i = 0; i <= inj.dom(); ++i) {
    if (commas && i) s += ',';
    s += std::to_string(inj(i));
  }
  return s;
}

template <std::size_t K>
std::string standard_label(const MultiOrdinal<K>& inj) {
  std::string s;
  for (std::size_t a = 0; a < K; ++a) {
    if (a) s += '|';
    s += vertex_list_label(inj[a]);
  }
  return s;
}

}  // namespace

std::size_t max_cells() {
  std::size_t v = g_max_cells.load();
  if (v == 0) {
    v = read_env_budget();
    g_max_cells.store(v);
  }
  return v;
}

void set_max_cells(std::size_t n) { g_max_cells.store(n); }

void check_budget(std::size_t n, const char* what) {
  if (n > max_cells()) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                        " elements exceed SEGALKIT_MAX_CELLS=" + std::to_string(max_cells()));
  }
}

// ---------------------------------------------------------------------------
// CellSet

template <std::size_t K>
struct CellSet<K>::Cache {
  std::mutex mu;
  std::map<Degree<K>, std::unique_ptr<std::vector<Cell<K>>>> cells;
  std::map<Degree<K>, std::unique_ptr<std::unordered_map<Cell<K>, std::size_t, CellHash<K>>>> index;
  std::map<Degree<K>,
           std::unique_ptr<std::unordered_map<std::vector<Cell<K>>, std::vector<std::uint32_t>,
                                              CellVectorHash<K>>>>
      faces;
  std::unordered_map<LevelKey, Cell<K>, LevelKeyHash> restricted;
  std::unique_ptr<std::unordered_map<std::string, std::uint32_t>> labels;
};

template <std::size_t K>
CellSet<K>::CellSet() : cache_(std::make_shared<Cache>()) {}

template <std::size_t K>
CellSet<K>::CellSet(std::vector<Generator<K>> gens, bool validate_now)
    : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  sort_generators(gens_);
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    auto& g = gens_[i];
    if (g.label.empty()) g.label = "g" + std::to_string(i);
    if (!seen.insert(g.label).second) throw std::invalid_argument("duplicate generator label " + g.label);
  }
  if (validate_now) validate();
}

template <std::size_t K>
std::vector<std::uint32_t> CellSet<K>::generators_of_degree(const Degree<K>& d) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].degree == d) out.push_back(i);
  return out;
}

template <std::size_t K>
std::optional<std::uint32_t> CellSet<K>::find_label(const std::string& label) const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->labels) {
    cache_->labels = std::make_unique<std::unordered_map<std::string, std::uint32_t>>();
    for (std::uint32_t i = 0; i < gens_.size(); ++i) (*cache_->labels)[gens_[i].label] = i;
  }
  auto it = cache_->labels->find(label);
  if (it == cache_->labels->end()) return std::nullopt;
  return it->second;
}

template <std::size_t K>
Degree<K> CellSet<K>::dimension() const {
  Degree<K> d;
  d.fill(-1);
  for (auto& g : gens_)
    for (std::size_t a = 0; a < K; ++a) d[a] = std::max(d[a], g.degree[a]);
  return d;
}

template <std::size_t K>
int CellSet<K>::total_dimension() const {
  int t = -1;
  for (auto& g : gens_) t = std::max(t, total(g.degree));
  return t;
}

template <std::size_t K>
bool CellSet<K>::is_discrete_in_last_axis() const {
  for (auto& g : gens_)
    if (g.degree[K - 1] != 0) return false;
  return true;
}

template <std::size_t K>
Cell<K> CellSet<K>::generator_cell(std::uint32_t g) const {
  if (g >= gens_.size()) throw std::out_of_range("generator index out of range");
  return Cell<K>{identity_multi<K>(gens_[g].degree), g};
}

template <std::size_t K>
const std::vector<Cell<K>>& CellSet<K>::cells(const Degree<K>& d) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->cells.find(d);
    if (it != cache_->cells.end()) return *it->second;
  }
  for (int x : d)
    if (x < 0) throw RangeError("negative degree");
  auto out = std::make_unique<std::vector<Cell<K>>>();
  for (std::uint32_t g = 0; g < gens_.size(); ++g) {
    if (!degree_leq<K>(gens_[g].degree, d)) continue;
    std::array<std::vector<OrdinalMap>, K> epis;
    std::size_t count = 1;
    for (std::size_t a = 0; a < K; ++a) {
      epis[a] = enumerate_surjections(d[a], gens_[g].degree[a]);
      count *= epis[a].size();
    }
    check_budget(out->size() + count, "cells of one degree");
    std::array<std::size_t, K> idx{};
    while (true) {
      Cell<K> c;
      c.gen = g;
      for (std::size_t a = 0; a < K; ++a) c.epis[a] = epis[a][idx[a]];
      out->push_back(c);
      // axis 0 outermost: increment from the last axis
      std::size_t a = K;
      while (a > 0) {
        --a;
        if (++idx[a] < epis[a].size()) break;
        idx[a] = 0;
        if (a == 0) {
          a = K + 1;
          break;
        }
      }
      if (a == K + 1) break;
    }
  }
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->cells.emplace(d, std::move(out));
  return *it->second;
}

template <std::size_t K>
std::optional<std::size_t> CellSet<K>::cell_index(const Cell<K>& c) const {
  const Degree<K> d = c.degree();
  const auto& all = cells(d);
  std::unordered_map<Cell<K>, std::size_t, CellHash<K>>* idx = nullptr;
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->index.find(d);
    if (it != cache_->index.end()) idx = it->second.get();
  }
  if (!idx) {
    auto built = std::make_unique<std::unordered_map<Cell<K>, std::size_t, CellHash<K>>>();
    for (std::size_t i = 0; i < all.size(); ++i) built->emplace(all[i], i);
    std::lock_guard lock(cache_->mu);
    auto [it, inserted] = cache_->index.emplace(d, std::move(built));
    idx = it->second.get();
  }
  auto it = idx->find(c);
  if (it == idx->end()) return std::nullopt;
  return it->second;
}

template <std::size_t K>
Cell<K> CellSet<K>::restrict_to(std::uint32_t g, const MultiOrdinal<K>& inj) const {
  bool all_id = true;
  for (auto& m : inj) all_id = all_id && m.is_identity();
  if (all_id) return generator_cell(g);
  LevelKey key = restrict_key<K>(g, inj);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->restricted.find(key);
    if (it != cache_->restricted.end()) return it->second;
  }
  std::size_t axis = 0;
  while (inj[axis].is_identity()) ++axis;
  const OrdinalMap& m = inj[axis];
  int missing = 0;
  for (int t = 0; t <= m.dom() && m(t) == missing; ++t) ++missing;
  std::vector<int> reduced;
  for (int t = 0; t <= m.dom(); ++t) reduced.push_back(m(t) < missing ? m(t) : m(t) - 1);
  MultiOrdinal<K> rest = inj;
  rest[axis] = OrdinalMap(m.cod() - 1, reduced);
  const auto& faces = gens_[g].faces[axis];
  if (static_cast<std::size_t>(missing) >= faces.size()) {
    throw InvariantViolation("generator " + gens_[g].label + " lacks face " + std::to_string(missing));
  }
  Cell<K> result = apply(rest, faces[static_cast<std::size_t>(missing)]);
  std::lock_guard lock(cache_->mu);
  cache_->restricted.emplace(std::move(key), result);
  return result;
}

template <std::size_t K>
Cell<K> CellSet<K>::apply(const MultiOrdinal<K>& tau, const Cell<K>& c) const {
  MultiOrdinal<K> surj, inj;
  for (std::size_t a = 0; a < K; ++a) {
    if (tau[a].cod() != c.epis[a].dom()) {
      throw RangeError("apply: arrow codomain " + std::to_string(tau[a].cod()) +
                       " does not match cell degree " + std::to_string(c.epis[a].dom()));
    }
    auto f = epi_mono_factor(compose(c.epis[a], tau[a]));
    surj[a] = f.surjection;
    inj[a] = f.injection;
  }
  Cell<K> r = restrict_to(c.gen, inj);
  for (std::size_t a = 0; a < K; ++a) r.epis[a] = compose(r.epis[a], surj[a]);
  return r;
}

template <std::size_t K>
Cell<K> CellSet<K>::face(const Cell<K>& c, std::size_t axis, int i) const {
  const Degree<K> d = c.degree();
  return apply(on_axis<K>(d, axis, segalkit::face(i, d[axis])), c);
}

template <std::size_t K>
Cell<K> CellSet<K>::degen(const Cell<K>& c, std::size_t axis, int i) const {
  Cell<K> r = c;
  r.epis[axis] = compose(c.epis[axis], degeneracy(i, c.epis[axis].dom()));
  return r;
}

template <std::size_t K>
Cell<K> CellSet<K>::vertex(const Cell<K>& c, const std::array<int, K>& at) const {
  MultiOrdinal<K> t;
  for (std::size_t a = 0; a < K; ++a) t[a] = OrdinalMap(c.epis[a].dom(), {at[a]});
  return apply(t, c);
}

template <std::size_t K>
std::vector<Cell<K>> CellSet<K>::face_key(const Cell<K>& c) const {
  std::vector<Cell<K>> key;
  const Degree<K> d = c.degree();
  for (std::size_t a = 0; a < K; ++a)
    if (d[a] > 0)
      for (int i = 0; i <= d[a]; ++i) key.push_back(face(c, a, i));
  return key;
}

template <std::size_t K>
const std::unordered_map<std::vector<Cell<K>>, std::vector<std::uint32_t>, CellVectorHash<K>>&
CellSet<K>::face_index(const Degree<K>& d) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->faces.find(d);
    if (it != cache_->faces.end()) return *it->second;
  }
  const auto& all = cells(d);
  auto built = std::make_unique<
      std::unordered_map<std::vector<Cell<K>>, std::vector<std::uint32_t>, CellVectorHash<K>>>();
  for (std::uint32_t i = 0; i < all.size(); ++i) (*built)[face_key(all[i])].push_back(i);
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->faces.emplace(d, std::move(built));
  return *it->second;
}

template <std::size_t K>
std::string CellSet<K>::cell_label(const Cell<K>& c) const {
  if (c.is_generator()) return gens_[c.gen].label;
  std::string s = gens_[c.gen].label + "^";
  for (std::size_t a = 0; a < K; ++a) {
    if (a) s += '|';
    for (int i = 0; i <= c.epis[a].dom(); ++i) s += (i ? "," : "") + std::to_string(c.epis[a](i));
  }
  return s;
}

template <std::size_t K>
void CellSet<K>::validate() const {
  for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
    const auto& g = gens_[gi];
    const std::string where = "generator " + g.label + ": ";
    for (std::size_t a = 0; a < K; ++a) {
      if (g.degree[a] < 0) throw std::invalid_argument(where + "negative degree");
      std::size_t expected = g.degree[a] == 0 ? 0 : static_cast<std::size_t>(g.degree[a]) + 1;
      if (g.faces[a].size() != expected) throw std::invalid_argument(where + "wrong number of faces");
      for (auto& f : g.faces[a]) {
        if (f.gen >= gi) throw std::invalid_argument(where + "face must reference an earlier generator");
        const auto& h = gens_[f.gen];
        for (std::size_t b = 0; b < K; ++b) {
          int want = g.degree[b] - (a == b ? 1 : 0);
          if (f.epis[b].dom() != want) throw std::invalid_argument(where + "face has wrong degree");
          if (f.epis[b].cod() != h.degree[b] || !f.epis[b].is_surjective()) {
            throw std::invalid_argument(where + "face surjection does not match its generator");
          }
        }
      }
    }
    const Cell<K> top = generator_cell(gi);
    for (std::size_t a = 0; a < K; ++a) {
      for (int j = 0; j <= g.degree[a] && g.degree[a] >= 2; ++j)
        for (int i = 0; i < j; ++i) {
          Cell<K> lhs = face(g.faces[a][static_cast<std::size_t>(j)], a, i);
          Cell<K> rhs = face(g.faces[a][static_cast<std::size_t>(i)], a, j - 1);
          if (!(lhs == rhs)) {
            throw std::invalid_argument(where + "simplicial identity d" + std::to_string(i) + "d" +
                                        std::to_string(j) + " fails on axis " + std::to_string(a));
          }
        }
      for (std::size_t b = a + 1; b < K; ++b) {
        if (g.degree[a] == 0 || g.degree[b] == 0) continue;
        for (int i = 0; i <= g.degree[a]; ++i)
          for (int j = 0; j <= g.degree[b]; ++j) {
            Cell<K> lhs = face(g.faces[a][static_cast<std::size_t>(i)], b, j);
            Cell<K> rhs = face(g.faces[b][static_cast<std::size_t>(j)], a, i);
            if (!(lhs == rhs)) throw std::invalid_argument(where + "faces along different axes do not commute");
          }
      }
    }
    (void)top;
  }
}

template <std::size_t K>
bool CellSet<K>::same_structure(const CellSet& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree != other.gens_[i].degree) return false;
    if (gens_[i].faces != other.gens_[i].faces) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// CellMap

template <std::size_t K>
CellMap<K>::CellMap(CellSetPtr<K> source, CellSetPtr<K> target, std::vector<Cell<K>> assignment,
                    bool validate)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw std::invalid_argument("map with null endpoint");
  if (assignment_.size() != source_->size()) throw std::invalid_argument("assignment size mismatch");
  for (std::uint32_t g = 0; g < assignment_.size(); ++g) {
    const auto& c = assignment_[g];
    if (c.gen >= target_->size()) throw std::invalid_argument("assignment references unknown generator");
    if (c.degree() != source_->generator(g).degree) throw std::invalid_argument("assignment degree mismatch");
    for (std::size_t a = 0; a < K; ++a)
      if (c.epis[a].cod() != target_->generator(c.gen).degree[a] || !c.epis[a].is_surjective())
        throw std::invalid_argument("assignment is not a normal cell");
  }
  if (validate) {
    if (auto why = commutation_failure()) throw std::invalid_argument("not a map: " + *why);
  }
}

template <std::size_t K>
CellMap<K> CellMap<K>::identity(CellSetPtr<K> x) {
  std::vector<Cell<K>> a;
  for (std::uint32_t g = 0; g < x->size(); ++g) a.push_back(x->generator_cell(g));
  return CellMap(x, x, std::move(a), false);
}

template <std::size_t K>
Cell<K> CellMap<K>::image(const Cell<K>& c) const {
  const Cell<K>& a = assignment_[c.gen];
  Cell<K> r;
  r.gen = a.gen;
  for (std::size_t ax = 0; ax < K; ++ax) r.epis[ax] = compose(a.epis[ax], c.epis[ax]);
  return r;
}

template <std::size_t K>
std::optional<std::string> CellMap<K>::commutation_failure() const {
  for (std::uint32_t g = 0; g < assignment_.size(); ++g) {
    const auto& gen = source_->generator(g);
    for (std::size_t a = 0; a < K; ++a)
      for (std::size_t i = 0; i < gen.faces[a].size(); ++i) {
        Cell<K> lhs = image(gen.faces[a][i]);
        Cell<K> rhs = target_->face(assignment_[g], a, static_cast<int>(i));
        if (!(lhs == rhs)) {
          return "generator " + gen.label + " face " + std::to_string(i) + " on axis " +
                 std::to_string(a);
        }
      }
  }
  return std::nullopt;
}

template <std::size_t K>
bool CellMap<K>::is_identity() const {
  if (source_ != target_ && !source_->same_structure(*target_)) return false;
  for (std::uint32_t g = 0; g < assignment_.size(); ++g)
    if (!(assignment_[g] == source_->generator_cell(g))) return false;
  return true;
}

template <std::size_t K>
bool CellMap<K>::is_injective_on_generators() const {
  std::unordered_set<Cell<K>, CellHash<K>> seen;
  for (auto& c : assignment_)
    if (!c.is_generator() || !seen.insert(c).second) return false;
  return true;
}

template <std::size_t K>
CellMap<K> compose(const CellMap<K>& g, const CellMap<K>& f) {
  if (f.target_ptr() != g.source_ptr() && !f.target().same_structure(g.source())) {
    throw std::invalid_argument("compose: maps are not composable");
  }
  std::vector<Cell<K>> a;
  a.reserve(f.assignment().size());
  for (auto& c : f.assignment()) a.push_back(g.image(c));
  return CellMap<K>(f.source_ptr(), g.target_ptr(), std::move(a), false);
}

// ---------------------------------------------------------------------------
// Hom search

namespace {

template <std::size_t K>
struct Search {
  const CellSet<K>& source;
  const CellSet<K>& target;
  const HomConstraints<K>& cons;
  const std::function<bool(const std::vector<Cell<K>>&)>& visit;
  std::vector<Cell<K>> assignment;
  std::vector<bool> used;  // target generators, for bijective search
  std::size_t visited = 0;

  Cell<K> image_of(const Cell<K>& c) const {
    const Cell<K>& a = assignment[c.gen];
    Cell<K> r;
    r.gen = a.gen;
    for (std::size_t ax = 0; ax < K; ++ax) r.epis[ax] = compose(a.epis[ax], c.epis[ax]);
    return r;
  }

  bool admissible(std::uint32_t g, const Cell<K>& cand, const std::optional<Cell<K>>& base) {
    if (cons.generators_bijective) {
      if (!cand.is_generator() || used[cand.gen]) return false;
    }
    if (base && !(cons.over->image(cand) == *base)) return false;
    (void)g;
    return true;
  }

  /// Generators in search order: every face precedes its cell, and a cell
  /// of total degree >= 2 is placed as soon as its faces are, so that
  /// higher cells prune partial assignments early.
  std::vector<std::uint32_t> order{};

  void plan() {
    const auto n = static_cast<std::uint32_t>(source.size());
    std::vector<bool> placed(n, false);
    auto ready = [&](std::uint32_t g) {
      for (auto& axis : source.generator(g).faces)
        for (auto& f : axis)
          if (!placed[f.gen]) return false;
      return true;
    };
    auto place = [&](std::uint32_t g) {
      placed[g] = true;
      order.push_back(g);
    };
    for (std::uint32_t g = 0; g < n; ++g) {
      if (placed[g]) continue;
      place(g);
      for (bool more = true; more;) {
        more = false;
        for (std::uint32_t h = g + 1; h < n; ++h)
          if (!placed[h] && total<K>(source.generator(h).degree) >= 2 && ready(h)) {
            place(h);
            more = true;
          }
      }
    }
  }

  bool rec(std::size_t pos) {
    if (pos == order.size()) {
      ++visited;
      return visit(assignment);
    }
    const std::uint32_t g = order[pos];
    const auto& gen = source.generator(g);
    std::vector<Cell<K>> required;
    for (std::size_t a = 0; a < K; ++a)
      for (auto& f : gen.faces[a]) required.push_back(image_of(f));
    std::optional<Cell<K>> base;
    if (cons.over) base = cons.over_base->image(source.generator_cell(g));

    auto try_candidate = [&](const Cell<K>& cand) -> bool {
      if (!admissible(g, cand, base)) return true;
      assignment[g] = cand;
      if (cons.generators_bijective) used[cand.gen] = true;
      bool go_on = rec(pos + 1);
      if (cons.generators_bijective) used[cand.gen] = false;
      return go_on;
    };

    if (g < cons.fixed.size() && cons.fixed[g]) {
      const Cell<K>& cand = *cons.fixed[g];
      if (cand.degree() != gen.degree || cand.gen >= target.size()) return true;
      if (target.face_key(cand) != required) return true;
      return try_candidate(cand);
    }
    const auto& index = target.face_index(gen.degree);
    auto it = index.find(required);
    if (it == index.end()) return true;
    const auto& all = target.cells(gen.degree);
    for (auto i : it->second)
      if (!try_candidate(all[i])) return false;
    return true;
  }
};

}  // namespace

template <std::size_t K>
std::size_t for_each_map(const CellSet<K>& source, const CellSet<K>& target,
                         const HomConstraints<K>& constraints,
                         const std::function<bool(const std::vector<Cell<K>>&)>& visit) {
  if (constraints.over && !constraints.over_base) {
    throw std::invalid_argument("hom search: over-constraint needs a base map");
  }
  Search<K> s{source, target, constraints, visit, std::vector<Cell<K>>(source.size()),
              std::vector<bool>(target.size(), false)};
  s.plan();
  s.rec(0);
  return s.visited;
}

template <std::size_t K>
std::vector<CellMap<K>> hom_enum(const CellSetPtr<K>& source, const CellSetPtr<K>& target,
                                 const HomConstraints<K>& constraints) {
  std::vector<CellMap<K>> out;
  for_each_map<K>(*source, *target, constraints, [&](const std::vector<Cell<K>>& a) {
    check_budget(out.size() + 1, "hom enumeration");
    out.emplace_back(source, target, a, false);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const CellMap<K>& x, const CellMap<K>& y) { return x.assignment() < y.assignment(); });
  return out;
}

template <std::size_t K>
std::size_t hom_count(const CellSet<K>& source, const CellSet<K>& target,
                      const HomConstraints<K>& constraints) {
  return for_each_map<K>(source, target, constraints, [](const std::vector<Cell<K>>&) { return true; });
}

template <std::size_t K>
std::optional<CellMap<K>> find_isomorphism(const CellSetPtr<K>& x, const CellSetPtr<K>& y,
                                           const CellMap<K>* x_over, const CellMap<K>* y_over) {
  if (x->size() != y->size()) return std::nullopt;
  std::map<Degree<K>, int> counts;
  for (auto& g : x->generators()) ++counts[g.degree];
  for (auto& g : y->generators()) --counts[g.degree];
  for (auto& [d, c] : counts)
    if (c != 0) return std::nullopt;
  HomConstraints<K> cons;
  cons.generators_bijective = true;
  if (x_over && y_over) {
    cons.over = y_over;
    cons.over_base = x_over;
  }
  std::optional<CellMap<K>> found;
  for_each_map<K>(*x, *y, cons, [&](const std::vector<Cell<K>>& a) {
    found.emplace(x, y, a, false);
    return false;
  });
  return found;
}

template <std::size_t K>
bool is_isomorphism(const CellMap<K>& f) {
  return f.source().size() == f.target().size() && f.is_injective_on_generators();
}

template <std::size_t K>
bool is_levelwise_bijective(const CellMap<K>& f, const Degree<K>& up_to) {
  for (auto& d : degrees_upto<K>(up_to, 1 << 20)) {
    const auto& src = f.source().cells(d);
    const auto& tgt = f.target().cells(d);
    if (src.size() != tgt.size()) return false;
    std::unordered_set<Cell<K>, CellHash<K>> seen;
    for (auto& c : src)
      if (!seen.insert(f.image(c)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Products

namespace {

/// Pairs of surjections out of [d] that are jointly injective.
std::vector<std::pair<OrdinalMap, OrdinalMap>> joint_epis(int d, int p, int q) {
  std::vector<std::pair<OrdinalMap, OrdinalMap>> out;
  auto left = enumerate_surjections(d, p);
  auto right = enumerate_surjections(d, q);
  for (auto& s : left)
    for (auto& t : right) {
      bool ok = true;
      for (int j = 0; j < d && ok; ++j)
        if (s(j) == s(j + 1) && t(j) == t(j + 1)) ok = false;
      if (ok) out.emplace_back(s, t);
    }
  return out;
}

}  // namespace

template <std::size_t K>
Product<K>::Product(CellSetPtr<K> x, CellSetPtr<K> y, std::optional<int> max_total, PairFilter filter)
    : x_(std::move(x)), y_(std::move(y)) {
  std::vector<Generator<K>> gens;
  std::vector<Cell<K>> firsts, seconds;
  if (!x_->empty() && !y_->empty()) {
    Degree<K> dx = x_->dimension(), dy = y_->dimension(), top;
    for (std::size_t a = 0; a < K; ++a) top[a] = dx[a] + dy[a];
    int cap = max_total.value_or(total(top));
    for (auto& d : degrees_upto<K>(top, cap)) {
      for (std::uint32_t gx = 0; gx < x_->size(); ++gx) {
        const auto& degx = x_->generator(gx).degree;
        if (!degree_leq<K>(degx, d)) continue;
        for (std::uint32_t gy = 0; gy < y_->size(); ++gy) {
          const auto& degy = y_->generator(gy).degree;
          if (!degree_leq<K>(degy, d)) continue;
          std::array<std::vector<std::pair<OrdinalMap, OrdinalMap>>, K> per_axis;
          bool any = true;
          for (std::size_t a = 0; a < K; ++a) {
            per_axis[a] = joint_epis(d[a], degx[a], degy[a]);
            if (per_axis[a].empty()) any = false;
          }
          if (!any) continue;
          std::array<std::size_t, K> idx{};
          while (true) {
            Cell<K> ca, cb;
            ca.gen = gx;
            cb.gen = gy;
            for (std::size_t a = 0; a < K; ++a) {
              ca.epis[a] = per_axis[a][idx[a]].first;
              cb.epis[a] = per_axis[a][idx[a]].second;
            }
            if (!filter || filter(ca, cb)) {
              Generator<K> g;
              g.degree = d;
              g.label = "(" + x_->cell_label(ca) + "," + y_->cell_label(cb) + ")";
              index_.emplace(std::vector<Cell<K>>{ca, cb}, static_cast<std::uint32_t>(gens.size()));
              gens.push_back(std::move(g));
              firsts.push_back(ca);
              seconds.push_back(cb);
              check_budget(gens.size(), "product generators");
            }
            std::size_t a = K;
            bool done = false;
            while (true) {
              if (a == 0) {
                done = true;
                break;
              }
              --a;
              if (++idx[a] < per_axis[a].size()) break;
              idx[a] = 0;
            }
            if (done) break;
          }
        }
      }
    }
  }
  // faces, now that every lower generator has an index
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t a = 0; a < K; ++a) {
      const int da = gens[i].degree[a];
      if (da == 0) continue;
      for (int j = 0; j <= da; ++j) {
        gens[i].faces[a].push_back(pair(x_->face(firsts[i], a, j), y_->face(seconds[i], a, j)));
      }
    }
  }
  object_ = make_cellset<K>(std::move(gens), false);
  first_ = CellMap<K>(object_, x_, firsts, false);
  second_ = CellMap<K>(object_, y_, seconds, false);
}

template <std::size_t K>
Cell<K> Product<K>::pair(const Cell<K>& a, const Cell<K>& b) const {
  if (a.degree() != b.degree()) throw std::invalid_argument("pair: degree mismatch");
  Cell<K> ra = a, rb = b, out;
  for (std::size_t ax = 0; ax < K; ++ax) {
    const OrdinalMap& s = a.epis[ax];
    const OrdinalMap& t = b.epis[ax];
    const int d = s.dom();
    std::vector<int> eta{0};
    for (int j = 0; j < d; ++j) {
      bool collapse = s(j) == s(j + 1) && t(j) == t(j + 1);
      eta.push_back(eta.back() + (collapse ? 0 : 1));
    }
    const int k = eta.back();
    std::vector<int> sv(static_cast<std::size_t>(k) + 1), tv(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= d; ++j) {
      sv[static_cast<std::size_t>(eta[static_cast<std::size_t>(j)])] = s(j);
      tv[static_cast<std::size_t>(eta[static_cast<std::size_t>(j)])] = t(j);
    }
    ra.epis[ax] = OrdinalMap(s.cod(), sv);
    rb.epis[ax] = OrdinalMap(t.cod(), tv);
    out.epis[ax] = OrdinalMap(k, eta);
  }
  auto it = index_.find(std::vector<Cell<K>>{ra, rb});
  if (it == index_.end()) throw std::invalid_argument("pair: cell is not in the (truncated) product");
  out.gen = it->second;
  return out;
}

template <std::size_t K>
CellMap<K> Product<K>::pairing(const CellMap<K>& f, const CellMap<K>& g) const {
  if (f.source_ptr() != g.source_ptr()) throw std::invalid_argument("pairing: different sources");
  std::vector<Cell<K>> a;
  for (std::size_t i = 0; i < f.assignment().size(); ++i) a.push_back(pair(f.assignment()[i], g.assignment()[i]));
  return CellMap<K>(f.source_ptr(), object_, std::move(a), false);
}

template <std::size_t K>
CellMap<K> product_map(const Product<K>& from, const Product<K>& to, const CellMap<K>& f,
                       const CellMap<K>& g) {
  return to.pairing(compose(f, from.first()), compose(g, from.second()));
}

template <std::size_t K>
Product<K> pullback(const CellMap<K>& f, const CellMap<K>& g, std::optional<int> max_total) {
  if (f.target_ptr() != g.target_ptr() && !f.target().same_structure(g.target())) {
    throw std::invalid_argument("pullback: maps have different targets");
  }
  CellMap<K> ff = f, gg = g;
  return Product<K>(f.source_ptr(), g.source_ptr(), max_total,
                    [ff, gg](const Cell<K>& a, const Cell<K>& b) { return ff.image(a) == gg.image(b); });
}

// ---------------------------------------------------------------------------
// Subobjects

template <std::size_t K>
Subobject<K> subobject(const CellSetPtr<K>& x, const std::vector<bool>& keep) {
  if (keep.size() != x->size()) throw std::invalid_argument("subobject: mask size mismatch");
  std::vector<std::optional<std::uint32_t>> index(x->size());
  std::vector<Generator<K>> gens;
  std::vector<Cell<K>> incl;
  for (std::uint32_t g = 0; g < x->size(); ++g) {
    if (!keep[g]) continue;
    Generator<K> gen = x->generator(g);
    for (auto& axis : gen.faces)
      for (auto& f : axis) {
        if (!index[f.gen]) throw std::invalid_argument("subobject: kept generators are not closed under faces");
        f.gen = *index[f.gen];
      }
    index[g] = static_cast<std::uint32_t>(gens.size());
    gens.push_back(std::move(gen));
    incl.push_back(x->generator_cell(g));
  }
  auto obj = make_cellset<K>(std::move(gens), false);
  return {obj, CellMap<K>(obj, x, std::move(incl), false), std::move(index)};
}

template <std::size_t K>
Subobject<K> generated_subobject(const CellSetPtr<K>& x, const std::vector<bool>& seeds) {
  std::vector<bool> keep = seeds;
  for (std::size_t g = x->size(); g-- > 0;) {
    if (!keep[g]) continue;
    for (auto& axis : x->generator(static_cast<std::uint32_t>(g)).faces)
      for (auto& f : axis) keep[f.gen] = true;
  }
  return subobject(x, keep);
}

template <std::size_t K>
Subobject<K> skeleton(const CellSetPtr<K>& x, int n) {
  std::vector<bool> keep(x->size());
  for (std::uint32_t g = 0; g < x->size(); ++g) keep[g] = total(x->generator(g).degree) <= n;
  return subobject(x, keep);
}

template <std::size_t K>
CellSetPtr<K> point() {
  static const CellSetPtr<K> pt = [] {
    Generator<K> g;
    g.degree.fill(0);
    g.label = "*";
    return make_cellset<K>({g});
  }();
  return pt;
}

template <std::size_t K>
CellMap<K> to_point(const CellSetPtr<K>& x) {
  std::vector<Cell<K>> a;
  for (auto& g : x->generators()) {
    Cell<K> c;
    for (std::size_t ax = 0; ax < K; ++ax) {
      std::vector<int> zeros(static_cast<std::size_t>(g.degree[ax]) + 1, 0);
      c.epis[ax] = OrdinalMap(0, zeros);
    }
    a.push_back(c);
  }
  return CellMap<K>(x, point<K>(), std::move(a), false);
}

template <std::size_t K>
CellMap<K> vertex_map(const CellSetPtr<K>& x, std::uint32_t v) {
  if (v >= x->size() || total(x->generator(v).degree) != 0) throw std::invalid_argument("not a vertex");
  return CellMap<K>(point<K>(), x, {x->generator_cell(v)}, false);
}

template <std::size_t K>
Product<K> fiber(const CellMap<K>& f, std::uint32_t v) {
  return pullback(vertex_map(f.target_ptr(), v), f);
}

// ---------------------------------------------------------------------------
// Colimits

template <std::size_t K>
Coproduct<K> coproduct(const std::vector<CellSetPtr<K>>& parts) {
  std::unordered_set<std::string> labels;
  bool clash = false;
  for (auto& p : parts)
    for (auto& g : p->generators())
      if (!labels.insert(g.label).second) clash = true;
  struct Entry {
    std::size_t part;
    std::uint32_t gen;
  };
  std::vector<Entry> entries;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::uint32_t g = 0; g < parts[p]->size(); ++g) entries.push_back({p, g});
  std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    return degree_less<K>(parts[a.part]->generator(a.gen).degree, parts[b.part]->generator(b.gen).degree);
  });
  std::vector<std::vector<std::uint32_t>> new_index(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) new_index[p].resize(parts[p]->size());
  for (std::uint32_t i = 0; i < entries.size(); ++i) new_index[entries[i].part][entries[i].gen] = i;
  std::vector<Generator<K>> gens;
  for (auto& e : entries) {
    Generator<K> g = parts[e.part]->generator(e.gen);
    if (clash) g.label = std::to_string(e.part) + "." + g.label;
    for (auto& axis : g.faces)
      for (auto& f : axis) f.gen = new_index[e.part][f.gen];
    gens.push_back(std::move(g));
  }
  auto obj = make_cellset<K>(std::move(gens), false);
  Coproduct<K> out{obj, {}};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Cell<K>> a;
    for (std::uint32_t g = 0; g < parts[p]->size(); ++g) a.push_back(obj->generator_cell(new_index[p][g]));
    out.inclusions.emplace_back(parts[p], obj, std::move(a), false);
  }
  return out;
}

template <std::size_t K>
Pushout<K>::Pushout(const CellMap<K>& f, const CellMap<K>& g) {
  if (f.source_ptr() != g.source_ptr() && !f.source().same_structure(g.source())) {
    throw std::invalid_argument("pushout: maps have different sources");
  }
  const CellSet<K>& A = f.source();
  const CellSet<K>* sides[2] = {&f.target(), &g.target()};
  Degree<K> top;
  Degree<K> dx = sides[0]->dimension(), dy = sides[1]->dimension();
  for (std::size_t a = 0; a < K; ++a) top[a] = std::max(dx[a], dy[a]);

  std::vector<Generator<K>> gens;
  std::unordered_set<std::string> used_labels;
  std::map<Degree<K>, std::array<std::vector<Cell<K>>, 2>> decomp;
  std::vector<Cell<K>> first_members;

  for (auto& d : degrees_upto<K>(top, total(top))) {
    const auto& xs = sides[0]->cells(d);
    const auto& ys = sides[1]->cells(d);
    const std::size_t nx = xs.size(), ny = ys.size();
    UnionFind uf(nx + ny);
    for (auto& c : A.cells(d)) {
      auto i = sides[0]->cell_index(f.image(c));
      auto j = sides[1]->cell_index(g.image(c));
      if (!i || !j) throw InvariantViolation("pushout: image cell missing");
      uf.unite(*i, nx + *j);
    }
    auto member = [&](std::size_t k) -> std::pair<int, const Cell<K>*> {
      return k < nx ? std::pair<int, const Cell<K>*>{0, &xs[k]} : std::pair<int, const Cell<K>*>{1, &ys[k - nx]};
    };
    // per root: first degenerate member (if any)
    std::vector<std::optional<std::size_t>> degenerate_member(nx + ny);
    for (std::size_t k = 0; k < nx + ny; ++k) {
      std::size_t r = uf.find(k);
      if (!degenerate_member[r] && !member(k).second->is_generator()) degenerate_member[r] = k;
    }
    std::vector<std::optional<Cell<K>>> root_cell(nx + ny);
    auto& out = decomp[d];
    out[0].resize(nx);
    out[1].resize(ny);
    for (std::size_t k = 0; k < nx + ny; ++k) {
      std::size_t r = uf.find(k);
      if (!root_cell[r]) {
        if (degenerate_member[r]) {
          auto [side, c] = member(*degenerate_member[r]);
          Cell<K> base = sides[side]->generator_cell(c->gen);
          auto bi = sides[side]->cell_index(base);
          const Cell<K>& lower = decomp.at(base.degree())[static_cast<std::size_t>(side)][*bi];
          Cell<K> res = lower;
          for (std::size_t a = 0; a < K; ++a) res.epis[a] = compose(lower.epis[a], c->epis[a]);
          root_cell[r] = res;
        } else {
          auto [side, c] = member(r);
          Generator<K> gen;
          gen.degree = d;
          gen.label = sides[side]->generator(c->gen).label;
          while (!used_labels.insert(gen.label).second) gen.label += "'";
          for (std::size_t a = 0; a < K; ++a) {
            if (d[a] == 0) continue;
            Degree<K> lower = minus_unit<K>(d, a);
            for (int i = 0; i <= d[a]; ++i) {
              Cell<K> fc = sides[side]->face(*c, a, i);
              auto fi = sides[side]->cell_index(fc);
              gen.faces[a].push_back(decomp.at(lower)[static_cast<std::size_t>(side)][*fi]);
            }
          }
          Cell<K> res;
          res.epis = identity_multi<K>(d);
          res.gen = static_cast<std::uint32_t>(gens.size());
          origin_.emplace_back(side, c->gen);
          gens.push_back(std::move(gen));
          root_cell[r] = res;
        }
      }
      if (k < nx)
        out[0][k] = *root_cell[r];
      else
        out[1][k - nx] = *root_cell[r];
    }
  }
  object_ = make_cellset<K>(std::move(gens), false);
  for (int side = 0; side < 2; ++side) {
    std::vector<Cell<K>> a;
    const CellSet<K>& s = *sides[side];
    for (std::uint32_t x = 0; x < s.size(); ++x) {
      Cell<K> gc = s.generator_cell(x);
      a.push_back(decomp.at(gc.degree())[static_cast<std::size_t>(side)][*s.cell_index(gc)]);
    }
    if (side == 0)
      left_ = CellMap<K>(f.target_ptr(), object_, std::move(a), false);
    else
      right_ = CellMap<K>(g.target_ptr(), object_, std::move(a), false);
  }
}

template <std::size_t K>
CellMap<K> Pushout<K>::induced(const CellMap<K>& u, const CellMap<K>& v) const {
  if (u.target_ptr() != v.target_ptr() && !u.target().same_structure(v.target())) {
    throw std::invalid_argument("pushout: induced maps need a common target");
  }
  std::vector<Cell<K>> a;
  for (auto& [side, gen] : origin_) {
    const CellMap<K>& m = side == 0 ? u : v;
    a.push_back(m.assignment()[gen]);
  }
  CellMap<K> out(object_, u.target_ptr(), std::move(a), false);
  if (compose(out, left_).assignment() != u.assignment() || compose(out, right_).assignment() != v.assignment()) {
    throw std::invalid_argument("pushout: legs do not agree on the common source");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalisation of levelwise presentations

template <std::size_t K>
Cell<K> Normalized<K>::lookup(const Degree<K>& d, const LevelKey& key) const {
  auto it = cell_of.find(d);
  if (it == cell_of.end()) throw std::out_of_range("normalized: degree outside the computed range");
  auto jt = it->second.find(key);
  if (jt == it->second.end()) throw std::out_of_range("normalized: unknown element");
  return jt->second;
}

template <std::size_t K>
Normalized<K> normalize(const LevelOracle<K>& oracle, const Degree<K>& max_per_axis, int max_total) {
  Normalized<K> out;
  std::vector<Generator<K>> gens;
  std::unordered_set<std::string> labels;
  for (auto& d : degrees_upto<K>(max_per_axis, max_total)) {
    auto elems = oracle.elements(d);
    check_budget(elems.size(), "level elements");
    auto& table = out.cell_of[d];
    for (auto& e : elems) {
      std::optional<Cell<K>> cell;
      for (std::size_t a = 0; a < K && !cell; ++a) {
        for (int i = 0; i < d[a] && !cell; ++i) {
          auto idem = on_axis<K>(d, a, compose(segalkit::face(i, d[a]), degeneracy(i, d[a] - 1)));
          if (oracle.act(idem, e) != e) continue;
          LevelKey lower_key = oracle.act(on_axis<K>(minus_unit<K>(d, a), a, segalkit::face(i, d[a])), e);
          // act expects arrows out of the target degree; the face arrow
          // d^i : [d-1] -> [d] is already in that form
          auto lt = out.cell_of.find(minus_unit<K>(d, a));
          auto jt = lt == out.cell_of.end() ? decltype(lt->second.end()){} : lt->second.find(lower_key);
          if (lt == out.cell_of.end() || jt == lt->second.end()) {
            throw InvariantViolation("normalize: face of a degenerate element is not listed at the lower level");
          }
          Cell<K> c = jt->second;
          c.epis[a] = compose(c.epis[a], degeneracy(i, d[a] - 1));
          cell = c;
        }
      }
      if (!cell) {
        Generator<K> g;
        g.degree = d;
        g.label = oracle.label ? oracle.label(d, e) : "g" + std::to_string(gens.size());
        while (!labels.insert(g.label).second) g.label += "'";
        for (std::size_t a = 0; a < K; ++a) {
          if (d[a] == 0) continue;
          Degree<K> lower = minus_unit<K>(d, a);
          for (int i = 0; i <= d[a]; ++i) {
            LevelKey fk = oracle.act(on_axis<K>(lower, a, segalkit::face(i, d[a])), e);
            auto& lt = out.cell_of.at(lower);
            auto jt = lt.find(fk);
            if (jt == lt.end()) throw InvariantViolation("normalize: face not listed at the lower level");
            g.faces[a].push_back(jt->second);
          }
        }
        Cell<K> c;
        c.epis = identity_multi<K>(d);
        c.gen = static_cast<std::uint32_t>(gens.size());
        gens.push_back(std::move(g));
        out.generator_key.push_back(e);
        cell = c;
      }
      table.emplace(e, *cell);
    }
  }
  out.object = make_cellset<K>(std::move(gens), false);
  return out;
}

// ---------------------------------------------------------------------------
// Standard objects

template <std::size_t K>
CellSetPtr<K> standard_cells(const Degree<K>& top) {
  std::vector<Generator<K>> gens;
  std::map<std::vector<LevelKey>, std::uint32_t> index;
  auto key_of = [](const MultiOrdinal<K>& t) {
    std::vector<LevelKey> k;
    for (auto& m : t) {
      auto v = m.values();
      k.emplace_back(v.begin(), v.end());
    }
    return k;
  };
  std::vector<MultiOrdinal<K>> arrows;
  for (auto& d : degrees_upto<K>(top, total(top))) {
    std::array<std::vector<OrdinalMap>, K> injs;
    bool any = true;
    for (std::size_t a = 0; a < K; ++a) {
      injs[a] = enumerate_injections(d[a], top[a]);
      if (injs[a].empty()) any = false;
    }
    if (!any) continue;
    std::array<std::size_t, K> idx{};
    while (true) {
      MultiOrdinal<K> t;
      for (std::size_t a = 0; a < K; ++a) t[a] = injs[a][idx[a]];
      index.emplace(key_of(t), static_cast<std::uint32_t>(arrows.size()));
      arrows.push_back(t);
      std::size_t a = K;
      bool done = false;
      while (true) {
        if (a == 0) {
          done = true;
          break;
        }
        --a;
        if (++idx[a] < injs[a].size()) break;
        idx[a] = 0;
      }
      if (done) break;
    }
  }
  for (auto& t : arrows) {
    Generator<K> g;
    for (std::size_t a = 0; a < K; ++a) g.degree[a] = t[a].dom();
    g.label = standard_label<K>(t);
    for (std::size_t a = 0; a < K; ++a) {
      if (g.degree[a] == 0) continue;
      for (int i = 0; i <= g.degree[a]; ++i) {
        MultiOrdinal<K> ft = t;
        ft[a] = compose(t[a], segalkit::face(i, g.degree[a]));
        Cell<K> c;
        c.epis = identity_multi<K>(Degree<K>{[&] {
          Degree<K> dd;
          for (std::size_t b = 0; b < K; ++b) dd[b] = ft[b].dom();
          return dd;
        }()});
        c.gen = index.at(key_of(ft));
        g.faces[a].push_back(c);
      }
    }
    gens.push_back(std::move(g));
  }
  return make_cellset<K>(std::move(gens), false);
}

template <std::size_t K>
Cell<K> standard_cell(const CellSet<K>& standard, const Degree<K>& top, const MultiOrdinal<K>& tau) {
  MultiOrdinal<K> inj;
  Cell<K> c;
  for (std::size_t a = 0; a < K; ++a) {
    if (tau[a].cod() != top[a]) throw RangeError("standard_cell: arrow does not land in the top degree");
    auto f = epi_mono_factor(tau[a]);
    inj[a] = f.injection;
    c.epis[a] = f.surjection;
  }
  auto g = standard.find_label(standard_label<K>(inj));
  if (!g) throw std::invalid_argument("standard_cell: not a standard object of this shape");
  c.gen = *g;
  return c;
}

template <std::size_t K>
MultiOrdinal<K> standard_arrow(const CellSet<K>& standard, const Degree<K>& top, const Cell<K>& c) {
  // Vertices of the standard object come first, ordered lexicographically.
  MultiOrdinal<K> out;
  const Degree<K> d = c.degree();
  for (std::size_t a = 0; a < K; ++a) {
    std::vector<int> vals;
    for (int j = 0; j <= d[a]; ++j) {
      std::array<int, K> at{};
      at[a] = j;
      std::uint32_t v = standard.vertex(c, at).gen;
      std::uint32_t stride = 1;
      for (std::size_t b = a + 1; b < K; ++b) stride *= static_cast<std::uint32_t>(top[b] + 1);
      vals.push_back(static_cast<int>((v / stride) % static_cast<std::uint32_t>(top[a] + 1)));
    }
    out[a] = OrdinalMap(top[a], vals);
  }
  return out;
}

template <std::size_t K>
CellMap<K> standard_map(const CellSetPtr<K>& from, const Degree<K>& from_top, const CellSetPtr<K>& to,
                        const Degree<K>& to_top, const MultiOrdinal<K>& tau) {
  std::vector<Cell<K>> a;
  for (std::uint32_t g = 0; g < from->size(); ++g) {
    auto arrow = standard_arrow(*from, from_top, from->generator_cell(g));
    MultiOrdinal<K> t;
    for (std::size_t ax = 0; ax < K; ++ax) t[ax] = compose(tau[ax], arrow[ax]);
    a.push_back(standard_cell(*to, to_top, t));
  }
  return CellMap<K>(from, to, std::move(a), false);
}

template <std::size_t K>
CellMap<K> characteristic_map(const CellSetPtr<K>& standard, const CellSetPtr<K>& x, const Cell<K>& c) {
  const Degree<K> top = c.degree();
  std::vector<Cell<K>> a;
  for (std::uint32_t g = 0; g < standard->size(); ++g) {
    a.push_back(x->apply(standard_arrow(*standard, top, standard->generator_cell(g)), c));
  }
  return CellMap<K>(standard, x, std::move(a), false);
}

template <std::size_t K>
std::vector<std::uint32_t> vertices(const CellSet<K>& x) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < x.size(); ++g)
    if (total(x.generator(g).degree) == 0) out.push_back(g);
  return out;
}

template <std::size_t K>
std::vector<int> vertex_components(const CellSet<K>& x) {
  auto vs = vertices(x);
  std::unordered_map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  UnionFind uf(vs.size());
  for (std::uint32_t g = 0; g < x.size(); ++g) {
    const auto& d = x.generator(g).degree;
    if (total(d) != 1) continue;
    std::size_t axis = 0;
    while (d[axis] == 0) ++axis;
    std::array<int, K> lo{}, hi{};
    hi[axis] = 1;
    Cell<K> c = x.generator_cell(g);
    uf.unite(pos.at(x.vertex(c, lo).gen), pos.at(x.vertex(c, hi).gen));
  }
  std::vector<int> out(vs.size());
  std::unordered_map<std::size_t, int> cls;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t r = uf.find(i);
    auto [it, inserted] = cls.emplace(r, static_cast<int>(cls.size()));
    out[i] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------

#define SEGALKIT_INSTANTIATE(K)                                                                        \
  template class CellSet<K>;                                                                           \
  template class CellMap<K>;                                                                           \
  template class Product<K>;                                                                           \
  template class Pushout<K>;                                                                           \
  template struct Normalized<K>;                                                                       \
  template CellMap<K> compose<K>(const CellMap<K>&, const CellMap<K>&);                                \
  template std::size_t for_each_map<K>(const CellSet<K>&, const CellSet<K>&, const HomConstraints<K>&, \
                                       const std::function<bool(const std::vector<Cell<K>>&)>&);       \
  template std::vector<CellMap<K>> hom_enum<K>(const CellSetPtr<K>&, const CellSetPtr<K>&,             \
                                               const HomConstraints<K>&);                              \
  template std::size_t hom_count<K>(const CellSet<K>&, const CellSet<K>&, const HomConstraints<K>&);   \
  template std::optional<CellMap<K>> find_isomorphism<K>(const CellSetPtr<K>&, const CellSetPtr<K>&,   \
                                                         const CellMap<K>*, const CellMap<K>*);        \
  template bool is_isomorphism<K>(const CellMap<K>&);                                                  \
  template bool is_levelwise_bijective<K>(const CellMap<K>&, const Degree<K>&);                        \
  template CellMap<K> product_map<K>(const Product<K>&, const Product<K>&, const CellMap<K>&,          \
                                     const CellMap<K>&);                                               \
  template Product<K> pullback<K>(const CellMap<K>&, const CellMap<K>&, std::optional<int>);           \
  template Subobject<K> subobject<K>(const CellSetPtr<K>&, const std::vector<bool>&);                  \
  template Subobject<K> generated_subobject<K>(const CellSetPtr<K>&, const std::vector<bool>&);        \
  template Subobject<K> skeleton<K>(const CellSetPtr<K>&, int);                                        \
  template Product<K> fiber<K>(const CellMap<K>&, std::uint32_t);                                      \
  template CellSetPtr<K> point<K>();                                                                   \
  template CellMap<K> to_point<K>(const CellSetPtr<K>&);                                               \
  template CellMap<K> vertex_map<K>(const CellSetPtr<K>&, std::uint32_t);                              \
  template Coproduct<K> coproduct<K>(const std::vector<CellSetPtr<K>>&);                               \
  template Normalized<K> normalize<K>(const LevelOracle<K>&, const Degree<K>&, int);                   \
  template CellSetPtr<K> standard_cells<K>(const Degree<K>&);                                          \
  template Cell<K> standard_cell<K>(const CellSet<K>&, const Degree<K>&, const MultiOrdinal<K>&);      \
  template MultiOrdinal<K> standard_arrow<K>(const CellSet<K>&, const Degree<K>&, const Cell<K>&);     \
  template CellMap<K> standard_map<K>(const CellSetPtr<K>&, const Degree<K>&, const CellSetPtr<K>&,    \
                                      const Degree<K>&, const MultiOrdinal<K>&);                       \
  template CellMap<K> characteristic_map<K>(const CellSetPtr<K>&, const CellSetPtr<K>&, const Cell<K>&); \
  template std::vector<std::uint32_t> vertices<K>(const CellSet<K>&);                                  \
  template std::vector<int> vertex_components<K>(const CellSet<K>&);

SEGALKIT_INSTANTIATE(1)
SEGALKIT_INSTANTIATE(2)

#undef SEGALKIT_INSTANTIATE

}  // namespace segalkit
