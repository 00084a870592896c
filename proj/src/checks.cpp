#include "segalkit/checks.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "segalkit/homology.hpp"
#include "segalkit/lifting.hpp"
#include "segalkit/suite.hpp"

namespace segalkit {

namespace {

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0) throw ParseError(std::string(what) + " must be a non-negative integer, got \"" + s + "\"");
  return v;
}

void expect_inputs(const std::vector<Json>& in, std::size_t lo, std::size_t hi, const std::string& kind) {
  if (in.size() < lo || in.size() > hi) {
    throw ParseError(kind + " expects " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                     " input file(s), got " + std::to_string(in.size()));
  }
}

/// A bisimplicial set from a "bisset" file or the nerve of a "fincat" file.
BiSet biset_input(const Json& j, int bound) {
  if (kind_of(j) == "fincat") {
    auto c = fincat_from_json(j);
    return disc_nerve(c, nerve_truncation(c, std::max(bound, 3)));
  }
  return cellset_from_json<2>(j);
}

void require_discrete(const BiSet& x, const std::string& kind) {
  if (!x->is_discrete_in_last_axis()) throw ParseError(kind + " needs an object that is discrete in the second axis");
}

Json verdict_certificate(const Verdict& v) {
  return Json{{"complete", v.complete}, {"extension", v.extension}, {"counterexample", v.certificate}};
}

Report fibration(const std::string& kind, const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, kind);
  const std::string space = map_space(in[0]);
  Verdict v;
  std::string anchor;
  if (kind == "kan-fib") {
    if (space != "sset") throw ParseError("kan-fib expects a map of simplicial sets");
    v = check_kan_fibration(map_from_json<1>(in[0]), bound);
    anchor = "fibration.kan-horns";
  } else if (kind == "trivial-fib") {
    v = space == "sset" ? check_trivial_fibration(map_from_json<1>(in[0]), bound)
                        : check_trivial_fibration(map_from_json<2>(in[0]), bound);
    anchor = "fibration.trivial-boundaries";
  } else {
    if (space != "bisset") throw ParseError(kind + " expects a map of bisimplicial sets");
    auto p = map_from_json<2>(in[0]);
    v = kind == "reedy-fib" ? check_reedy_fibration(p, bound) : check_left_fibration(p, bound);
    anchor = kind == "reedy-fib" ? "fibration.reedy-family" : "fibration.left-family";
  }
  return make_report(kind, anchor, v.tier(), v.holds, verdict_certificate(v));
}

Report segal(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "segal");
  auto x = biset_input(in[0], bound);
  require_discrete(x, "segal");
  Json cert{{"levels", bound}};
  bool ok = true;
  for (int n = 2; n <= bound && ok; ++n)
    if (!check_segal_discrete(x, n)) {
      ok = false;
      cert["failing_level"] = n;
    }
  return make_report("segal", "segal.maps", bounded_tier(bound), ok, cert);
}

Report complete(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "complete");
  auto x = biset_input(in[0], bound);
  require_discrete(x, "complete");
  auto c = is_complete_discrete(x);
  return make_report("complete", "complete.discrete", kExactTier, c.complete, Json{{"heq", c.heq}, {"objects", c.objects}});
}

Report ho_cat(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 2, "ho-cat");
  auto x = biset_input(in[0], bound);
  require_discrete(x, "ho-cat");
  bool ok = check_segal_discrete(x, std::min(3, std::max(2, x->dimension()[0])));
  Json cert{{"segal", ok}};
  if (ok) {
    auto ho = homotopy_category(x);
    cert["category"] = fincat_to_json(ho.category);
    if (in.size() == 2) {
      bool iso = find_cat_isomorphism(ho.category, fincat_from_json(in[1])).has_value();
      cert["isomorphic"] = iso;
      ok = iso;
    }
  }
  return make_report("ho-cat", "segal.homotopy-category", kExactTier, ok, cert);
}

Report heq(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "heq");
  auto x = biset_input(in[0], bound);
  require_discrete(x, "heq");
  auto p = prime_components(x);
  return make_report("heq", "complete.heq-prime", kExactTier, p.matches,
                     Json{{"x1", p.x1.size()}, {"x3", p.x3.size()}, {"d12", p.d12.size()}, {"heq", p.heq.size()}});
}

Report yoneda_eval(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "yoneda-eval");
  auto f = functor_from_json(in[0]);
  if (f.functor.contravariant) throw ParseError("yoneda-eval expects a covariant functor");
  auto e = elements(f.category, f.functor, nerve_truncation(f.category, std::max(bound + 1, 4)));
  Json per = Json::array();
  bool ok = true;
  for (int x = 0; x < static_cast<int>(f.category.objects.size()); ++x) {
    auto r = evaluation_check(e, x, bound);
    per.push_back(Json{{"object", f.category.objects[static_cast<std::size_t>(x)]},
                       {"maps", r.maps},
                       {"fiber", r.fiber},
                       {"bijective", r.bijective()}});
    ok = ok && r.bijective();
  }
  return make_report("yoneda-eval", "yoneda.evaluation", bounded_tier(bound), ok, Json{{"objects", per}});
}

Report yoneda_ff(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "yoneda-ff");
  auto c = fincat_from_json(in[0]);
  auto r = fully_faithful_yoneda_check(c, nerve_truncation(c, std::max(bound, 3)));
  Json fibers = Json::array();
  for (auto& f : r.fibers)
    fibers.push_back(Json{{"source", c.objects[f[0]]}, {"target", c.objects[f[1]]}, {"fiber", f[2]}, {"hom", f[3]}});
  return make_report("yoneda-ff", "yoneda.fully-faithful", kExactTier, r.ok(),
                     Json{{"fibers", fibers}, {"counts_match", r.counts_match}, {"natural", r.natural}, {"squares", r.squares}});
}

Report cyl_fiber(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "cyl-fiber");
  auto chain = chain_from_json(in[0]);
  auto cyl = cyl_disc(chain);
  auto f = fiber_formula_check(chain, cyl, bound);
  auto s = check_cylinder(chain, cyl);
  Json cert{{"pieces", f.pieces}, {"mismatches", f.mismatches}, {"cells", cyl.object->size()}, {"structure", s.ok()},
            {"iota0_mono", s.iota0_mono}};
  return make_report("cyl-fiber", "cylinder.fiber-formula", bounded_tier(bound), f.ok() && s.ok(), cert);
}

Report prism(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 0, 0, "prism");
  Json per = Json::array();
  bool ok = true;
  for (int n = 1; n <= bound; ++n) {
    auto p = prism_decomposition(n);
    per.push_back(Json{{"n", n}, {"counts_match", p.counts_match}, {"isomorphism", p.isomorphism}});
    ok = ok && p.counts_match && p.isomorphism;
  }
  return make_report("prism", "left.prism", kExactTier, ok, Json{{"decompositions", per}});
}

Report skeleton(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "skeleton-pushout");
  auto x = biset_input(in[0], bound);
  Json per = Json::array();
  bool ok = true;
  for (int n = 0; n <= bound; ++n) {
    auto s = skeleton_pushout(x, n);
    per.push_back(Json{{"n", n}, {"cells", s.cells.size()}, {"isomorphism", s.isomorphism}});
    ok = ok && s.isomorphism;
  }
  return make_report("skeleton-pushout", "skeleton.pushout", bounded_tier(bound), ok, Json{{"degrees", per}});
}

Report homology_check(const std::vector<Json>& in) {
  expect_inputs(in, 1, 1, "homology");
  auto x = cellset_from_json<1>(in[0]);
  Json groups = Json::object();
  int top = std::max(0, x->total_dimension());
  auto h = homology_upto(*x, top);
  for (int d = 0; d <= top; ++d) groups["H" + std::to_string(d)] = h[static_cast<std::size_t>(d)].to_string();
  return make_report("homology", "homology.spheres", kExactTier, true, groups);
}

Report we_check(const std::vector<Json>& in, int bound) {
  expect_inputs(in, 1, 1, "we-necessary");
  if (map_space(in[0]) != "sset") throw ParseError("we-necessary expects a map of simplicial sets");
  auto r = we_necessary(map_from_json<1>(in[0]), bound);
  return make_report("we-necessary", "homology.we-necessary", bounded_tier(bound), r.verdict == WeVerdict::Consistent,
                     Json{{"verdict", to_string(r.verdict)}, {"reason", r.reason}});
}

Report pi0_check(const std::vector<Json>& in) {
  expect_inputs(in, 1, 1, "pi0");
  if (kind_of(in[0]) == "map") {
    if (map_space(in[0]) != "sset") throw ParseError("pi0 expects simplicial sets");
    auto f = map_from_json<1>(in[0]);
    return make_report("pi0", "pi0.components", kExactTier, true,
                       Json{{"source", pi0(f.source()).count()}, {"target", pi0(f.target()).count()}, {"map", pi0_map(f)}});
  }
  auto x = cellset_from_json<1>(in[0]);
  auto c = pi0(*x);
  Json reps = Json::array();
  for (auto r : c.representative) reps.push_back(x->generator(r).label);
  return make_report("pi0", "pi0.components", kExactTier, true, Json{{"components", c.count()}, {"representatives", reps}});
}

// ---------------------------------------------------------------------------
// Factories

Json load(const std::string& path) { return read_json_file(path); }

void expect_params(const std::vector<std::string>& p, std::size_t n, const std::string& factory) {
  if (p.size() != n) throw ParseError(factory + " expects " + std::to_string(n) + " parameter(s)");
}

FinCat category_param(const std::string& s) {
  if (s.size() > 5 && s.substr(s.size() - 5) == ".json") return fincat_from_json(load(s));
  return named_category(s);
}

template <std::size_t K>
Json product_of(const Json& a, const Json& b) {
  Product<K> p(cellset_from_json<K>(a), cellset_from_json<K>(b));
  return cellset_to_json<K>(*p.object());
}

template <std::size_t K>
Json pushout_of(const Json& f, const Json& g) {
  auto mf = map_from_json<K>(f);
  auto mg = map_from_json<K>(g);
  if (!mf.source().same_structure(mg.source())) throw ParseError("pushout: the maps need the same source");
  Pushout<K> p(mf, CellMap<K>(mf.source_ptr(), mg.target_ptr(), mg.assignment()));
  return cellset_to_json<K>(*p.object());
}

using Factory = std::function<Json(const std::vector<std::string>&)>;

const std::map<std::string, Factory>& factories() {
  static const std::map<std::string, Factory> table = {
      {"standard", [](auto& p) { expect_params(p, 1, "standard"); return cellset_to_json<1>(*standard(parse_int(p[0], "n"))); }},
      {"boundary", [](auto& p) {
         expect_params(p, 1, "boundary");
         return cellset_to_json<1>(*boundary(parse_int(p[0], "n")));
       }},
      {"horn", [](auto& p) {
         expect_params(p, 2, "horn");
         int n = parse_int(p[0], "n"), k = parse_int(p[1], "k");
         if (n < 1 || k > n) throw ParseError("horn needs 0 <= k <= n and n >= 1");
         return cellset_to_json<1>(*horn(n, k));
       }},
      {"boundary-inclusion", [](auto& p) {
         expect_params(p, 1, "boundary-inclusion");
         int n = parse_int(p[0], "n");
         if (n < 1) throw ParseError("boundary-inclusion needs n >= 1");
         return map_to_json<1>(standard_inclusion(boundary(n), n));
       }},
      {"horn-inclusion", [](auto& p) {
         expect_params(p, 2, "horn-inclusion");
         int n = parse_int(p[0], "n"), k = parse_int(p[1], "k");
         if (n < 1 || k > n) throw ParseError("horn-inclusion needs 0 <= k <= n and n >= 1");
         return map_to_json<1>(standard_inclusion(horn(n, k), n));
       }},
      {"box", [](auto& p) {
         expect_params(p, 2, "box");
         return cellset_to_json<2>(*box(parse_int(p[0], "n"), parse_int(p[1], "m")));
       }},
      {"boundary-box", [](auto& p) {
         expect_params(p, 2, "boundary-box");
         return cellset_to_json<2>(*boundary_box(parse_int(p[0], "n"), parse_int(p[1], "m")));
       }},
      {"F", [](auto& p) { expect_params(p, 1, "F"); return cellset_to_json<2>(*F(parse_int(p[0], "n"))); }},
      {"dF", [](auto& p) { expect_params(p, 1, "dF"); return cellset_to_json<2>(*dF(parse_int(p[0], "n"))); }},
      {"Fhorn", [](auto& p) {
         expect_params(p, 2, "Fhorn");
         int n = parse_int(p[0], "n"), i = parse_int(p[1], "i");
         if (n < 1 || i > n) throw ParseError("Fhorn needs 0 <= i <= n and n >= 1");
         return cellset_to_json<2>(*Fhorn(n, i));
       }},
      {"disc", [](auto& p) { expect_params(p, 1, "disc"); return cellset_to_json<2>(*disc(cellset_from_json<1>(load(p[0])))); }},
      {"constant", [](auto& p) {
         expect_params(p, 1, "constant");
         return cellset_to_json<2>(*constant(cellset_from_json<1>(load(p[0]))));
       }},
      {"fincat", [](auto& p) { expect_params(p, 1, "fincat"); return fincat_to_json(named_category(p[0])); }},
      {"nerve", [](auto& p) {
         if (p.empty() || p.size() > 2) throw ParseError("nerve expects a category and an optional dimension");
         auto c = category_param(p[0]);
         auto dim = p.size() == 2 ? std::optional<int>(parse_int(p[1], "dimension")) : nerve_truncation(c, 4);
         return cellset_to_json<1>(*nerve(c, dim).object);
       }},
      {"disc-nerve", [](auto& p) {
         if (p.empty() || p.size() > 2) throw ParseError("disc-nerve expects a category and an optional dimension");
         auto c = category_param(p[0]);
         auto dim = p.size() == 2 ? std::optional<int>(parse_int(p[1], "dimension")) : nerve_truncation(c, 4);
         return cellset_to_json<2>(*disc_nerve(c, dim));
       }},
      {"representable", [](auto& p) {
         expect_params(p, 2, "representable");
         auto c = category_param(p[0]);
         int x = parse_int(p[1], "object");
         if (x >= static_cast<int>(c.objects.size())) throw ParseError("representable: object out of range");
         return functor_to_json(c, representable(c, x));
       }},
      {"elements", [](auto& p) {
         if (p.empty() || p.size() > 2) throw ParseError("elements expects [category] functor");
         auto f = functor_from_json(load(p.back()));
         if (p.size() == 2 && !find_cat_isomorphism(category_param(p[0]), f.category))
           throw ParseError("elements: the functor is defined on a different category");
         auto e = elements(f.category, f.functor, nerve_truncation(f.category, 4));
         return map_to_json<2>(e.projection);
       }},
      {"cylinder", [](auto& p) {
         expect_params(p, 1, "cylinder");
         return cellset_to_json<2>(*cyl_disc(chain_from_json(load(p[0]))).object);
       }},
      {"twist-projection", [](auto& p) {
         if (p.empty() || p.size() > 2) throw ParseError("twist-projection expects an object and an optional bound");
         Json j = load(p[0]);
         int d = p.size() == 2 ? parse_int(p[1], "bound") : 3;
         auto x = kind_of(j) == "fincat" ? [&] {
           auto c = fincat_from_json(j);
           return disc_nerve(c, nerve_truncation(c, 2 * d + 1));
         }()
                                         : cellset_from_json<2>(j);
         return map_to_json<2>(twist_projection(x, d).map);
       }},
      {"to-point", [](auto& p) {
         expect_params(p, 1, "to-point");
         Json j = load(p[0]);
         if (kind_of(j) == "sset") return map_to_json<1>(to_point<1>(cellset_from_json<1>(j)));
         return map_to_json<2>(to_point<2>(cellset_from_json<2>(j)));
       }},
      {"product", [](auto& p) {
         expect_params(p, 2, "product");
         Json a = load(p[0]), b = load(p[1]);
         if (kind_of(a) != kind_of(b)) throw ParseError("product: both factors must have the same kind");
         return kind_of(a) == "sset" ? product_of<1>(a, b) : product_of<2>(a, b);
       }},
      {"pushout", [](auto& p) {
         expect_params(p, 2, "pushout");
         Json f = load(p[0]), g = load(p[1]);
         if (map_space(f) != map_space(g)) throw ParseError("pushout: both maps must have the same kind");
         return map_space(f) == "sset" ? pushout_of<1>(f, g) : pushout_of<2>(f, g);
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds = {"kan-fib",     "trivial-fib", "reedy-fib", "left-fib",  "segal",
                                                 "complete",    "ho-cat",      "heq",       "yoneda-eval", "yoneda-ff",
                                                 "cyl-fiber",   "prism",       "skeleton-pushout", "homology",
                                                 "we-necessary", "pi0"};
  return kinds;
}

Report run_check(const std::string& kind, const std::vector<Json>& in, int bound) {
  if (bound < 1) throw ParseError("--bound must be at least 1");
  if (kind == "kan-fib" || kind == "trivial-fib" || kind == "reedy-fib" || kind == "left-fib") return fibration(kind, in, bound);
  if (kind == "segal") return segal(in, bound);
  if (kind == "complete") return complete(in, bound);
  if (kind == "ho-cat") return ho_cat(in, bound);
  if (kind == "heq") return heq(in, bound);
  if (kind == "yoneda-eval") return yoneda_eval(in, bound);
  if (kind == "yoneda-ff") return yoneda_ff(in, bound);
  if (kind == "cyl-fiber") return cyl_fiber(in, bound);
  if (kind == "prism") return prism(in, bound);
  if (kind == "skeleton-pushout") return skeleton(in, bound);
  if (kind == "homology") return homology_check(in);
  if (kind == "we-necessary") return we_check(in, bound);
  if (kind == "pi0") return pi0_check(in);
  throw ParseError("unknown check kind \"" + kind + "\"");
}

const std::vector<std::string>& factory_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (auto& [name, f] : factories()) out.push_back(name);
    return out;
  }();
  return names;
}

Json make_object(const std::string& factory, const std::vector<std::string>& params) {
  auto it = factories().find(factory);
  if (it == factories().end()) throw ParseError("unknown factory \"" + factory + "\"");
  try {
    return it->second(params);
  } catch (const RangeError& e) {
    throw ParseError(factory + ": " + e.what());
  }
}

FinCat named_category(const std::string& name) {
  auto suffix = [&](const std::string& stem) -> std::optional<int> {
    if (name.rfind(stem, 0) != 0 || name.size() == stem.size()) return std::nullopt;
    return parse_int(name.substr(stem.size()), "category size");
  };
  if (name == "parallel") return parallel_pair();
  if (name == "idempotent") return make_category({"*"}, {{"1", 0, 0}, {"e", 0, 0}}, {0}, {{0, 1}, {1, 1}});
  if (auto n = suffix("path")) return ordinal_category(*n);
  if (auto n = suffix("discrete")) return discrete_category(*n);
  if (name.rfind("groupoid", 0) == 0) {
    auto rest = name.substr(8);
    auto us = rest.find('_');
    if (us == std::string::npos) throw ParseError("groupoid names look like groupoidK_G");
    return connected_groupoid(parse_int(rest.substr(0, us), "objects"), parse_int(rest.substr(us + 1), "group order"));
  }
  if (auto n = suffix("z")) {
    if (*n < 1) throw ParseError("zN needs N >= 1");
    return cyclic_group(*n);
  }
  throw ParseError("unknown category \"" + name + "\"");
}

}  // namespace segalkit
