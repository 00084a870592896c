#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "segalkit/bisset.hpp"
#include "segalkit/cylinder.hpp"
#include "segalkit/io.hpp"
#include "segalkit/segal.hpp"
#include "segalkit/sset.hpp"
#include "segalkit/suite.hpp"
#include "segalkit/yoneda.hpp"

using namespace segalkit;
namespace fs = std::filesystem;

namespace {

template <std::size_t K>
void round_trip(const CellSetPtr<K>& x) {
  Json saved = cellset_to_json<K>(*x);
  auto loaded = cellset_from_json<K>(saved);
  CHECK(loaded->same_structure(*x));
  CHECK(canonical(cellset_to_json<K>(*loaded)) == canonical(saved));
  CHECK(canonical(Json::parse(canonical(saved))) == canonical(saved));
}

template <std::size_t K>
void map_round_trip(const CellMap<K>& f) {
  Json saved = map_to_json<K>(f);
  auto loaded = map_from_json<K>(saved);
  CHECK(loaded.source().same_structure(f.source()));
  CHECK(loaded.target().same_structure(f.target()));
  CHECK(loaded.assignment() == f.assignment());
  CHECK(canonical(map_to_json<K>(loaded)) == canonical(saved));
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "segalkit_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("simplicial sets survive save and load") {
  for (int n = 0; n <= 3; ++n) round_trip<1>(standard(n));
  for (int n = 1; n <= 3; ++n) round_trip<1>(boundary(n));
  round_trip<1>(horn(3, 1));
  round_trip<1>(nerve(cyclic_group(2), 3).object);
  Product<1> p(standard(1), standard(2));
  round_trip<1>(p.object());
  map_round_trip<1>(standard_inclusion(boundary(2), 2));
  map_round_trip<1>(to_point<1>(horn(2, 0)));
}

TEST_CASE("bisimplicial sets survive save and load") {
  round_trip<2>(F(2));
  round_trip<2>(dF(2));
  round_trip<2>(box(1, 1));
  round_trip<2>(constant(standard(1)));
  round_trip<2>(disc_nerve(ordinal_category(2)));
  map_round_trip<2>(to_point<2>(F(1)));
}

TEST_CASE("categories, functors and chains survive save and load") {
  for (auto c : {ordinal_category(2), cyclic_group(3), parallel_pair(), connected_groupoid(2, 2)}) {
    Json saved = fincat_to_json(c);
    CHECK(canonical(fincat_to_json(fincat_from_json(saved))) == canonical(saved));
    CHECK(find_cat_isomorphism(fincat_from_json(saved), c).has_value());
  }
  auto c = cyclic_group(3);
  Json f = functor_to_json(c, representable(c, 0));
  CHECK(canonical(functor_to_json(functor_from_json(f).category, functor_from_json(f).functor)) == canonical(f));

  std::mt19937_64 rng(7);
  for (int m = 0; m <= 2; ++m) {
    Json saved = chain_to_json(random_chain(rng, m));
    auto loaded = chain_from_json(saved);
    CHECK(loaded.objects.size() == static_cast<std::size_t>(m) + 1);
    CHECK(canonical(chain_to_json(loaded)) == canonical(saved));
  }
}

TEST_CASE("cells may be listed in any order") {
  Json j = cellset_to_json<1>(*standard(2));
  for (auto& level : j["generators"]) {
    auto& cells = level["cells"];
    std::reverse(cells.begin(), cells.end());
  }
  CHECK(cellset_from_json<1>(j)->same_structure(*standard(2)));

  Json loop = cellset_to_json<1>(*standard(1));
  auto& faces = loop["generators"][1]["cells"][0]["faces"];
  faces[0]["generator"] = faces[1]["generator"];
  CHECK(cellset_from_json<1>(loop)->size() == 3);
}

TEST_CASE("malformed input is a parse error") {
  Json good = cellset_to_json<1>(*standard(1));
  CHECK_THROWS_AS(cellset_from_json<1>(Json::array()), ParseError);
  CHECK_THROWS_AS(cellset_from_json<2>(good), ParseError);

  Json no_faces = good;
  no_faces["generators"][1]["cells"][0]["faces"] = Json::array();
  CHECK_THROWS_AS(cellset_from_json<1>(no_faces), ParseError);

  Json dangling = good;
  dangling["generators"][1]["cells"][0]["faces"][0]["generator"] = 9;
  CHECK_THROWS_AS(cellset_from_json<1>(dangling), ParseError);

  Json wrong_degree = cellset_to_json<1>(*standard(2));
  for (auto& cell : wrong_degree["generators"][2]["cells"])
    for (auto& face : cell["faces"]) face["surjection"] = Json::array({0, 0});
  CHECK_THROWS_AS(cellset_from_json<1>(wrong_degree), ParseError);

  Json not_surjective = cellset_to_json<1>(*standard(1));
  not_surjective["generators"][1]["cells"][0]["faces"][0]["surjection"] = Json::array({0, 2});
  CHECK_THROWS_AS(cellset_from_json<1>(not_surjective), ParseError);

  Json map = map_to_json<1>(standard_inclusion(boundary(2), 2));
  map["assignment"].erase(0);
  CHECK_THROWS_AS(map_from_json<1>(map), ParseError);

  Json twisted = map_to_json<1>(standard_map(1, 1, OrdinalMap::identity(1)));
  auto& a = twisted["assignment"];
  std::swap(a[0], a[1]);
  CHECK_THROWS_AS(map_from_json<1>(twisted), ParseError);
}

TEST_CASE("file errors name the file") {
  auto path = scratch("broken.json");
  {
    std::ofstream out(path);
    out << "{\"kind\": ";
  }
  try {
    read_json_file(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file(scratch("missing.json")), ParseError);

  auto saved = scratch("delta2.json");
  write_json_file(saved, cellset_to_json<1>(*standard(2)));
  CHECK(cellset_from_json<1>(read_json_file(saved))->same_structure(*standard(2)));
}

TEST_CASE("corpus generation is deterministic") {
  auto a = scratch("corpus_a"), b = scratch("corpus_b");
  fs::remove_all(a);
  fs::remove_all(b);
  write_corpus(default_corpus(11), a);
  write_corpus(default_corpus(11), b);
  std::size_t files = 0;
  for (auto& entry : fs::directory_iterator(a)) {
    std::ifstream x(entry.path()), y(b / entry.path().filename());
    std::string sx((std::istreambuf_iterator<char>(x)), {}), sy((std::istreambuf_iterator<char>(y)), {});
    CHECK(sx == sy);
    ++files;
  }
  CHECK(files == load_corpus(a).size());
}
