#include "segalkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace segalkit {

namespace {

const char* space_name(std::size_t k) { return k == 1 ? "sset" : "bisset"; }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return a;
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < -1 || v > (1 << 30)) throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

int nonneg(const Json& j, const char* what) {
  int v = int_of(j, what);
  if (v < 0) throw ParseError(std::string(what) + " must be non-negative");
  return v;
}

void expect_kind(const Json& j, const std::string& kind) {
  if (kind_of(j) != kind) throw ParseError("expected kind \"" + kind + "\", found \"" + kind_of(j) + "\"");
}

Json ordinal_to_json(const OrdinalMap& m) { return m.values(); }

OrdinalMap ordinal_from_json(const Json& j, int cod) {
  if (!j.is_array() || j.empty()) throw ParseError("surjection must be a non-empty array");
  std::vector<int> v;
  for (auto& x : j) v.push_back(nonneg(x, "surjection value"));
  try {
    return OrdinalMap(cod, v);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad surjection: ") + e.what());
  }
}

template <std::size_t K>
Json surjection_to_json(const MultiOrdinal<K>& epis) {
  if constexpr (K == 1) {
    return ordinal_to_json(epis[0]);
  } else {
    Json a = Json::array();
    for (auto& e : epis) a.push_back(ordinal_to_json(e));
    return a;
  }
}

template <std::size_t K>
MultiOrdinal<K> surjection_from_json(const Json& j, const Degree<K>& cod) {
  MultiOrdinal<K> out;
  if constexpr (K == 1) {
    out[0] = ordinal_from_json(j, cod[0]);
  } else {
    if (!j.is_array() || j.size() != K) throw ParseError("bisimplicial surjection must be a pair of arrays");
    for (std::size_t a = 0; a < K; ++a) out[a] = ordinal_from_json(j[a], cod[a]);
  }
  for (auto& e : out)
    if (!e.is_surjective()) throw ParseError("surjection " + e.to_string() + " is not surjective");
  return out;
}

template <std::size_t K>
Json cell_to_json(const Cell<K>& c) {
  return Json{{"generator", c.gen}, {"surjection", surjection_to_json<K>(c.epis)}};
}

template <std::size_t K>
Degree<K> degree_from_json(const Json& j) {
  if (!j.is_array() || j.size() != K) throw ParseError("degree must have " + std::to_string(K) + " entries");
  Degree<K> d;
  for (std::size_t a = 0; a < K; ++a) d[a] = nonneg(j[a], "degree");
  return d;
}

template <std::size_t K>
Json degree_to_json(const Degree<K>& d) {
  return Json(std::vector<int>(d.begin(), d.end()));
}

/// Degrees of the generators of a parsed object file, by file id.
template <std::size_t K>
std::vector<Degree<K>> file_degrees(const Json& groups) {
  std::vector<std::pair<int, Degree<K>>> ids;
  for (auto& grp : groups) {
    auto d = degree_from_json<K>(field(grp, "degree"));
    for (auto& g : array_field(grp, "cells")) ids.emplace_back(nonneg(field(g, "id"), "generator id"), d);
  }
  std::sort(ids.begin(), ids.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<Degree<K>> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].first != static_cast<int>(i)) throw ParseError("generator ids must be 0.." + std::to_string(ids.size() - 1) + " without repeats");
    out.push_back(ids[i].second);
  }
  return out;
}

template <std::size_t K>
Cell<K> cell_from_json(const Json& j, const std::vector<Degree<K>>& degrees, const std::vector<std::uint32_t>& remap) {
  int g = nonneg(field(j, "generator"), "generator reference");
  if (static_cast<std::size_t>(g) >= degrees.size()) throw ParseError("reference to unknown generator " + std::to_string(g));
  Cell<K> c;
  c.gen = remap[static_cast<std::size_t>(g)];
  c.epis = surjection_from_json<K>(field(j, "surjection"), degrees[static_cast<std::size_t>(g)]);
  return c;
}

}  // namespace

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw ParseError("field \"kind\" must be a string");
  return k.get<std::string>();
}

std::string map_space(const Json& j) {
  expect_kind(j, "map");
  const Json& s = field(j, "space");
  if (!s.is_string() || (s != "sset" && s != "bisset")) throw ParseError("map space must be \"sset\" or \"bisset\"");
  return s.get<std::string>();
}

template <std::size_t K>
Json cellset_to_json(const CellSet<K>& x) {
  Json groups = Json::array();
  for (std::uint32_t g = 0; g < x.size(); ++g) {
    const auto& gen = x.generator(g);
    if (groups.empty() || groups.back()["degree"] != degree_to_json<K>(gen.degree))
      groups.push_back(Json{{"degree", degree_to_json<K>(gen.degree)}, {"cells", Json::array()}});
    Json faces = Json::array();
    for (std::size_t a = 0; a < K; ++a)
      for (std::size_t i = 0; i < gen.faces[a].size(); ++i) {
        Json f = cell_to_json<K>(gen.faces[a][i]);
        f["axis"] = a;
        f["index"] = i;
        faces.push_back(std::move(f));
      }
    groups.back()["cells"].push_back(Json{{"id", g}, {"label", gen.label}, {"faces", std::move(faces)}});
  }
  return Json{{"kind", space_name(K)}, {"generators", std::move(groups)}};
}

template <std::size_t K>
CellSetPtr<K> cellset_from_json(const Json& j) {
  expect_kind(j, space_name(K));
  const Json& groups = array_field(j, "generators");
  auto degrees = file_degrees<K>(groups);
  // Canonical position of every file id: (degree, id) order.
  std::vector<std::uint32_t> order(degrees.size());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return degree_less<K>(degrees[a], degrees[b]); });
  std::vector<std::uint32_t> remap(degrees.size());
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<std::uint32_t>(i);

  std::vector<Generator<K>> gens(degrees.size());
  for (auto& grp : groups)
    for (auto& g : array_field(grp, "cells")) {
      auto id = static_cast<std::size_t>(nonneg(field(g, "id"), "generator id"));
      Generator<K>& out = gens[remap[id]];
      out.degree = degrees[id];
      if (g.contains("label")) {
        if (!g["label"].is_string()) throw ParseError("label must be a string");
        out.label = g["label"].get<std::string>();
      }
      for (std::size_t a = 0; a < K; ++a)
        if (out.degree[a] > 0) out.faces[a].resize(static_cast<std::size_t>(out.degree[a]) + 1);
      std::array<std::vector<bool>, K> seen;
      for (std::size_t a = 0; a < K; ++a) seen[a].assign(out.faces[a].size(), false);
      for (auto& f : array_field(g, "faces")) {
        int axis = nonneg(field(f, "axis"), "face axis");
        int index = nonneg(field(f, "index"), "face index");
        if (axis >= static_cast<int>(K) || index >= static_cast<int>(out.faces[static_cast<std::size_t>(axis)].size()))
          throw ParseError("face (" + std::to_string(axis) + ", " + std::to_string(index) + ") out of range for generator " + std::to_string(id));
        auto ax = static_cast<std::size_t>(axis);
        auto ix = static_cast<std::size_t>(index);
        if (seen[ax][ix]) throw ParseError("face listed twice on generator " + std::to_string(id));
        seen[ax][ix] = true;
        out.faces[ax][ix] = cell_from_json<K>(f, degrees, remap);
      }
      for (std::size_t a = 0; a < K; ++a)
        for (bool s : seen[a])
          if (!s) throw ParseError("missing face on generator " + std::to_string(id));
    }
  try {
    return make_cellset<K>(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid object: ") + e.what());
  }
}

template <std::size_t K>
Json map_to_json(const CellMap<K>& f) {
  Json a = Json::array();
  for (auto& c : f.assignment()) a.push_back(cell_to_json<K>(c));
  return Json{{"kind", "map"},
              {"space", space_name(K)},
              {"source", cellset_to_json<K>(f.source())},
              {"target", cellset_to_json<K>(f.target())},
              {"assignment", std::move(a)}};
}

template <std::size_t K>
CellMap<K> map_from_assignment(const Json& assignment, const CellSetPtr<K>& source, const CellSetPtr<K>& target) {
  if (!assignment.is_array() || assignment.size() != source->size())
    throw ParseError("assignment must list one cell per source generator");
  std::vector<Degree<K>> degrees;
  std::vector<std::uint32_t> remap;
  for (std::uint32_t g = 0; g < target->size(); ++g) {
    degrees.push_back(target->generator(g).degree);
    remap.push_back(g);
  }
  std::vector<Cell<K>> cells;
  for (auto& c : assignment) cells.push_back(cell_from_json<K>(c, degrees, remap));
  try {
    CellMap<K> f(source, target, std::move(cells));
    if (auto failure = f.commutation_failure()) throw ParseError("assignment is not simplicial: " + *failure);
    return f;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid map: ") + e.what());
  }
}

template <std::size_t K>
CellMap<K> map_from_json(const Json& j) {
  if (map_space(j) != space_name(K)) throw ParseError(std::string("expected a map of ") + space_name(K));
  auto source = cellset_from_json<K>(field(j, "source"));
  auto target = cellset_from_json<K>(field(j, "target"));
  return map_from_assignment<K>(field(j, "assignment"), source, target);
}

Json fincat_to_json(const FinCat& c) {
  Json arrows = Json::array();
  for (auto& a : c.arrows) arrows.push_back(Json{{"name", a.name}, {"source", a.source}, {"target", a.target}});
  return Json{{"kind", "fincat"},
              {"objects", c.objects},
              {"arrows", std::move(arrows)},
              {"identity", c.identity},
              {"composition", c.composition}};
}

FinCat fincat_from_json(const Json& j) {
  expect_kind(j, "fincat");
  FinCat c;
  for (auto& o : array_field(j, "objects")) {
    if (!o.is_string()) throw ParseError("object names must be strings");
    c.objects.push_back(o.get<std::string>());
  }
  for (auto& a : array_field(j, "arrows")) {
    const Json& name = field(a, "name");
    if (!name.is_string()) throw ParseError("arrow names must be strings");
    c.arrows.push_back({name.get<std::string>(), nonneg(field(a, "source"), "arrow source"),
                        nonneg(field(a, "target"), "arrow target")});
  }
  for (auto& i : array_field(j, "identity")) c.identity.push_back(nonneg(i, "identity arrow"));
  for (auto& row : array_field(j, "composition")) {
    if (!row.is_array()) throw ParseError("composition rows must be arrays");
    std::vector<int> r;
    for (auto& x : row) r.push_back(int_of(x, "composite"));
    c.composition.push_back(std::move(r));
  }
  try {
    c.validate();
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid category: ") + e.what());
  }
  return c;
}

Json functor_to_json(const FinCat& c, const SetFunctor& f) {
  return Json{{"kind", "functor"},
              {"category", fincat_to_json(c)},
              {"sizes", f.sizes},
              {"on_arrows", f.on_arrows},
              {"contravariant", f.contravariant}};
}

FunctorFile functor_from_json(const Json& j) {
  expect_kind(j, "functor");
  FunctorFile out;
  out.category = fincat_from_json(field(j, "category"));
  for (auto& s : array_field(j, "sizes")) out.functor.sizes.push_back(nonneg(s, "set size"));
  for (auto& row : array_field(j, "on_arrows")) {
    if (!row.is_array()) throw ParseError("arrow actions must be arrays");
    std::vector<int> r;
    for (auto& x : row) r.push_back(nonneg(x, "element"));
    out.functor.on_arrows.push_back(std::move(r));
  }
  const Json& cv = field(j, "contravariant");
  if (!cv.is_boolean()) throw ParseError("contravariant must be a boolean");
  out.functor.contravariant = cv.get<bool>();
  try {
    validate_set_functor(out.category, out.functor);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid functor: ") + e.what());
  }
  return out;
}

Json chain_to_json(const ChainOverB& c) {
  Json objects = Json::array(), to_base = Json::array(), maps = Json::array();
  for (auto& o : c.objects) objects.push_back(cellset_to_json<2>(*o));
  for (auto& p : c.to_base) to_base.push_back(map_to_json<2>(p)["assignment"]);
  for (auto& f : c.maps) maps.push_back(map_to_json<2>(f)["assignment"]);
  return Json{{"kind", "chain"},
              {"base", cellset_to_json<2>(*c.base)},
              {"objects", std::move(objects)},
              {"to_base", std::move(to_base)},
              {"maps", std::move(maps)}};
}

ChainOverB chain_from_json(const Json& j) {
  expect_kind(j, "chain");
  auto base = cellset_from_json<2>(field(j, "base"));
  std::vector<BiSet> objects;
  for (auto& o : array_field(j, "objects")) objects.push_back(cellset_from_json<2>(o));
  if (objects.empty()) throw ParseError("a chain needs at least one object");
  const Json& tb = array_field(j, "to_base");
  const Json& ms = array_field(j, "maps");
  if (tb.size() != objects.size() || ms.size() + 1 != objects.size())
    throw ParseError("a chain of n objects needs n maps to the base and n - 1 maps between them");
  std::vector<BiMap> to_base, maps;
  for (std::size_t i = 0; i < objects.size(); ++i) to_base.push_back(map_from_assignment<2>(tb[i], objects[i], base));
  for (std::size_t i = 0; i + 1 < objects.size(); ++i)
    maps.push_back(map_from_assignment<2>(ms[i], objects[i], objects[i + 1]));
  try {
    return make_chain(base, std::move(objects), std::move(to_base), std::move(maps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid chain: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << canonical(j);
}

template Json cellset_to_json<1>(const CellSet<1>&);
template Json cellset_to_json<2>(const CellSet<2>&);
template CellSetPtr<1> cellset_from_json<1>(const Json&);
template CellSetPtr<2> cellset_from_json<2>(const Json&);
template Json map_to_json<1>(const CellMap<1>&);
template Json map_to_json<2>(const CellMap<2>&);
template CellMap<1> map_from_json<1>(const Json&);
template CellMap<2> map_from_json<2>(const Json&);
template CellMap<1> map_from_assignment<1>(const Json&, const CellSetPtr<1>&, const CellSetPtr<1>&);
template CellMap<2> map_from_assignment<2>(const Json&, const CellSetPtr<2>&, const CellSetPtr<2>&);

}  // namespace segalkit
