#include "segalkit/report.hpp"

#include <algorithm>
#include <cstdio>

namespace segalkit {

const std::vector<std::string>& anchor_registry() {
  static const std::vector<std::string> anchors = {
      "complete.discrete",
      "complete.heq-prime",
      "cylinder.fiber-formula",
      "fibration.kan-horns",
      "fibration.left-family",
      "fibration.left-levelwise",
      "fibration.reedy-family",
      "fibration.trivial-boundaries",
      "homology.spheres",
      "homology.we-necessary",
      "left.prism",
      "left.retract",
      "ordinal.identities",
      "pi0.components",
      "segal.homotopy-category",
      "segal.maps",
      "skeleton.pushout",
      "standard.yoneda-count",
      "suite.determinism",
      "twist.projection",
      "yoneda.evaluation",
      "yoneda.fully-faithful",
  };
  return anchors;
}

bool is_registered_anchor(const std::string& anchor) {
  const auto& r = anchor_registry();
  return std::binary_search(r.begin(), r.end(), anchor);
}

Report make_report(std::string check, std::string anchor, std::string tier, bool verdict, Json certificate) {
  if (!is_registered_anchor(anchor)) throw InvariantViolation("report cites unregistered anchor " + anchor);
  if (tier.empty()) throw InvariantViolation("report without a tier");
  Report r;
  r.check = std::move(check);
  r.anchor = std::move(anchor);
  r.tier = std::move(tier);
  r.verdict = verdict;
  r.certificate = std::move(certificate);
  return r;
}

std::string bounded_tier(int bound) { return "bounded(" + std::to_string(bound) + ")"; }

Json Report::to_json() const {
  return Json{{"check", check}, {"anchor", anchor}, {"tier", tier}, {"verdict", verdict}, {"certificate", certificate}};
}

std::string Report::to_text() const {
  char time[32];
  std::snprintf(time, sizeof time, "%.3f", seconds);
  std::string out = check + ": " + (verdict ? "true" : "false") + " [" + tier + "] (" + anchor + ", " + time + " s)\n";
  if (!certificate.is_null()) out += certificate.dump(2) + "\n";
  return out;
}

}  // namespace segalkit
