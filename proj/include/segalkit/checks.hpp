#pragma once

// The named checks and object factories behind the command line.

#include <string>
#include <vector>

#include "segalkit/report.hpp"

namespace segalkit {

/// The check kinds, in a fixed order.
const std::vector<std::string>& check_kinds();

/// Runs a named check on parsed input files. Throws ParseError on usage
/// errors (unknown kind, wrong number or kind of inputs, bound < 1).
Report run_check(const std::string& kind, const std::vector<Json>& inputs, int bound);

/// The factory names accepted by make_object.
const std::vector<std::string>& factory_names();

/// Builds an object file from a factory name and its parameters (integers,
/// category names or input file paths). Throws ParseError on bad parameters.
Json make_object(const std::string& factory, const std::vector<std::string>& params);

/// Named categories: pathN, zN, discreteN, parallel, idempotent, groupoidK_G.
FinCat named_category(const std::string& name);

}  // namespace segalkit
