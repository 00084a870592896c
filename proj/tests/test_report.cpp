#include <algorithm>

#include "doctest.h"
#include "segalkit/checks.hpp"
#include "segalkit/report.hpp"
#include "segalkit/sset.hpp"

using namespace segalkit;

TEST_CASE("anchor registry") {
  const auto& anchors = anchor_registry();
  CHECK(std::is_sorted(anchors.begin(), anchors.end()));
  CHECK(std::adjacent_find(anchors.begin(), anchors.end()) == anchors.end());
  for (auto& a : anchors) {
    CHECK(is_registered_anchor(a));
    CHECK(a.find(':') == std::string::npos);
    CHECK(a.find('.') != std::string::npos);
  }
  CHECK_FALSE(is_registered_anchor("fibration"));
  CHECK_FALSE(is_registered_anchor(""));
}

TEST_CASE("reports validate anchor and tier") {
  auto r = make_report("homology", "homology.spheres", kExactTier, true, Json{{"H0", "Z"}});
  CHECK(r.verdict);
  CHECK_THROWS_AS(make_report("homology", "nowhere", kExactTier, true, Json::object()), InvariantViolation);
  CHECK_THROWS_AS(make_report("homology", "homology.spheres", "", true, Json::object()), InvariantViolation);
  CHECK(bounded_tier(3) == "bounded(3)");
}

TEST_CASE("JSON reports carry no timing") {
  auto r = make_report("pi0", "pi0.components", kExactTier, true, Json{{"components", 1}});
  r.seconds = 1.5;
  Json j = r.to_json();
  auto again = r;
  again.seconds = 42;
  CHECK(canonical(j) == canonical(again.to_json()));
  CHECK(j["anchor"] == "pi0.components");
  CHECK(j["tier"] == kExactTier);
  CHECK(j["verdict"] == true);
  CHECK(r.to_text().find("pi0.components") != std::string::npos);
}

TEST_CASE("every check kind reports a registered anchor") {
  auto point = cellset_to_json<1>(*standard(0));
  auto r = run_check("homology", {point}, 2);
  CHECK(is_registered_anchor(r.anchor));
  CHECK(r.certificate["H0"] == "Z");
  CHECK_THROWS_AS(run_check("homology", {}, 2), ParseError);
  CHECK_THROWS_AS(run_check("homology", {point}, 0), ParseError);
  CHECK_THROWS_AS(run_check("no-such-check", {point}, 2), ParseError);
  for (auto& kind : check_kinds()) CHECK_FALSE(kind.empty());
}
