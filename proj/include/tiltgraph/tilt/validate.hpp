#pragma once

#include <string>
#include <vector>

#include "tiltgraph/tilt/model.hpp"

namespace tiltgraph::tilt {

enum class Severity { warning, error };

struct ValidationIssue {
    Severity severity;
    std::string path;    // e.g. "dataDisclosed[1].legalBases[0].reference"
    std::string message;
};

/// Pure invariant check; same document always yields the identical issue list.
/// Empty result means the document satisfies every invariant. Non-fatal gaps
/// (missing sector, missing country) come back as warnings.
std::vector<ValidationIssue> validate_tilt(const TiltDocument& doc);

/// True when no error-severity issue is present.
bool is_ingestable(const std::vector<ValidationIssue>& issues);

const char* severity_name(Severity s);

} // namespace tiltgraph::tilt
