#pragma once

// Check reports. Every report names a registered anchor and a tier; wall
// time appears only in the text form so JSON reports are reproducible.

#include <string>
#include <vector>

#include "segalkit/io.hpp"

namespace segalkit {

inline const char* kExactTier = "exact-discrete";

struct Report {
  std::string check;
  std::string anchor;
  std::string tier;
  bool verdict = false;
  Json certificate;
  double seconds = 0;

  Json to_json() const;
  std::string to_text() const;
};

/// The fixed set of anchors a report may cite.
const std::vector<std::string>& anchor_registry();
bool is_registered_anchor(const std::string& anchor);

/// Builds a report; throws InvariantViolation for an unregistered anchor or
/// an empty tier.
Report make_report(std::string check, std::string anchor, std::string tier, bool verdict, Json certificate);

std::string bounded_tier(int bound);

}  // namespace segalkit
