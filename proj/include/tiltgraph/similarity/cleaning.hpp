#pragma once

#include <string>
#include <vector>

namespace tiltgraph::similarity {

/// Name-cleaning policy applied before similarity scoring. Steps run in fixed
/// order: lowercase, strip punctuation, strip legal suffixes, collapse
/// whitespace. clean(clean(s)) == clean(s) for every policy.
struct CleaningPolicy {
    bool lowercase = true;
    bool strip_punctuation = true;
    bool collapse_whitespace = true;
    bool strip_legal_suffixes = true;

    static CleaningPolicy none() { return {false, false, false, false}; }
};

/// Legal-form suffixes removed when they appear as trailing words:
/// ltd, gmbh, inc, llc, ag, se, co, corp.
const std::vector<std::string>& legal_suffixes();

std::string clean_text(const std::string& s, const CleaningPolicy& policy);

} // namespace tiltgraph::similarity
