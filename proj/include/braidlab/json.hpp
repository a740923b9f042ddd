#pragma once

// Stable JSON documents for presentations and reports. Keys are emitted in a
// fixed order; wall times are omitted unless asked for, so the documents are
// deterministic functions of their inputs.

#include <optional>
#include <string>

#include "braidlab/homs.hpp"
#include "braidlab/lab.hpp"
#include "braidlab/presentation.hpp"

namespace braidlab {

/// {family, n, g, generators:[...], families:[{tag, condition, count}],
///  relators:[{tag, indices, h?, word}]}
std::string presentation_json(Presentation const& p, std::optional<LHSampler> const& lh, int indent = 2);

/// {map, domain, checked, passed, failed:[...], unknown:[...]}
std::string well_defined_json(WellDefinedReport const& r, int indent = 2);

/// {config, ok, checks:[{name, population, passed, failures, unknown, wall_ms?}]}
std::string suite_json(SuiteReport const& r, bool include_timing = false, int indent = 2);

}  // namespace braidlab
