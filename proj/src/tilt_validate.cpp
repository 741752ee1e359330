#include "tiltgraph/tilt/validate.hpp"

#include <cctype>
#include <set>

namespace tiltgraph::tilt {

const char* severity_name(Severity s) {
    return s == Severity::error ? "error" : "warning";
}

bool is_ingestable(const std::vector<ValidationIssue>& issues) {
    for (const ValidationIssue& issue : issues) {
        if (issue.severity == Severity::error) return false;
    }
    return true;
}

namespace {

bool looks_like_country_code(const std::string& s) {
    return s.size() == 2 && std::isalpha(static_cast<unsigned char>(s[0])) &&
           std::isalpha(static_cast<unsigned char>(s[1]));
}

} // namespace

std::vector<ValidationIssue> validate_tilt(const TiltDocument& doc) {
    std::vector<ValidationIssue> issues;
    auto error = [&](std::string path, std::string msg) {
        issues.push_back({Severity::error, std::move(path), std::move(msg)});
    };
    auto warning = [&](std::string path, std::string msg) {
        issues.push_back({Severity::warning, std::move(path), std::move(msg)});
    };

    if (doc.meta_id.empty()) error("meta._id", "meta._id must be non-empty");
    if (doc.controller.name.empty()) error("controller.name", "controller name must be non-empty");

    if (!doc.controller.sector_raw) {
        warning("controller.sector", "no ISIC sector classification");
    } else if (!doc.controller.sector) {
        error("controller.sector",
              "'" + *doc.controller.sector_raw + "' is not a valid ISIC section (A-U)");
    }
    if (!doc.controller.country.empty() && !looks_like_country_code(doc.controller.country)) {
        warning("controller.country", "'" + doc.controller.country + "' is not an ISO 3166-1 alpha-2 code");
    }

    std::set<std::string> seen_entry_ids;
    for (std::size_t i = 0; i < doc.data_disclosed.size(); ++i) {
        const DataDisclosed& d = doc.data_disclosed[i];
        const std::string base = "dataDisclosed[" + std::to_string(i) + "]";
        if (d.category.empty()) error(base + ".category", "category must be non-empty");
        if (!d.entry_id.empty() && !seen_entry_ids.insert(d.entry_id).second) {
            error(base + "._id", "duplicate entry id '" + d.entry_id + "'");
        }
        for (std::size_t j = 0; j < d.legal_bases.size(); ++j) {
            const LegalBasisRef& ref = d.legal_bases[j].reference;
            const std::string path = base + ".legalBases[" + std::to_string(j) + "].reference";
            if (ref.raw.empty()) {
                error(path, "empty legal basis reference");
            } else if (ref.is_gdpr_6_1() && (ref.gdpr->letter < 'a' || ref.gdpr->letter > 'f')) {
                error(path, "GDPR Art. 6(1) has no letter '" + std::string(1, ref.gdpr->letter) + "' (a-f)");
            }
        }
        for (std::size_t j = 0; j < d.recipients.size(); ++j) {
            const RecipientRef& r = d.recipients[j];
            const std::string path = base + ".recipients[" + std::to_string(j) + "]";
            if (r.name.empty()) error(path + ".name", "recipient name must be non-empty");
            if (!r.country.empty() && !looks_like_country_code(r.country)) {
                warning(path + ".country", "'" + r.country + "' is not an ISO 3166-1 alpha-2 code");
            }
        }
        for (std::size_t j = 0; j < d.storage.size(); ++j) {
            const StorageEntry& s = d.storage[j];
            if (s.ttl_days && *s.ttl_days < 0) {
                error(base + ".storage[" + std::to_string(j) + "].ttl_days", "ttl_days must be >= 0");
            }
        }
    }

    for (std::size_t i = 0; i < doc.third_country_transfers.size(); ++i) {
        if (!looks_like_country_code(doc.third_country_transfers[i])) {
            warning("thirdCountryTransfers[" + std::to_string(i) + "]",
                    "'" + doc.third_country_transfers[i] + "' is not an ISO 3166-1 alpha-2 code");
        }
    }
    return issues;
}

} // namespace tiltgraph::tilt
