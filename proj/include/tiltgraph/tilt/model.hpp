#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tiltgraph::tilt {

// Unrecognized keys of each recognized object level ride along here and are
// re-emitted on serialization (insertion order kept, values byte-equivalent
// up to whitespace and key order).
using ExtraFields = nlohmann::ordered_json;

/// ISIC rev.4 section code (single letter A-U) plus optional free-form
/// division string ("J-63" / "J63" parse to section 'J', division "63").
struct IsicSector {
    char section = '?';
    std::string division;
};

/// Legal basis reference: either a structured GDPR reference of the form
/// "GDPR-<article>-<paragraph>-<letter>" or a free-form national-law string.
struct LegalBasisRef {
    std::string raw;

    struct GdprRef {
        int article = 0;
        int paragraph = 0;
        char letter = '?';
    };
    std::optional<GdprRef> gdpr;

    static LegalBasisRef parse(const std::string& text);
    bool is_gdpr_6_1() const { return gdpr && gdpr->article == 6 && gdpr->paragraph == 1; }
};

struct PurposeEntry {
    std::string purpose;
    std::string description;
    ExtraFields extra = ExtraFields::object();
};

struct LegalBasisEntry {
    LegalBasisRef reference;
    std::string description;
    ExtraFields extra = ExtraFields::object();
};

struct StorageEntry {
    std::string temporal_description;
    std::optional<std::int64_t> ttl_days; // normalized when machine-parseable
    ExtraFields extra = ExtraFields::object();
};

struct RecipientRef {
    std::string name;
    std::string country;  // ISO 3166-1 alpha-2, optional
    std::string division;
    std::string address;
    std::string category;
    ExtraFields extra = ExtraFields::object();
};

struct DataDisclosed {
    std::string entry_id;
    std::string category;
    std::vector<PurposeEntry> purposes;
    std::vector<LegalBasisEntry> legal_bases;
    std::vector<StorageEntry> storage;
    std::vector<RecipientRef> recipients;
    ExtraFields extra = ExtraFields::object();
};

struct ControllerInfo {
    std::string name;
    std::string country;
    std::optional<std::string> sector_raw; // input text, kept verbatim for round trips
    std::optional<IsicSector> sector;      // parsed form, present iff sector_raw parses
    std::string address;
    std::string division;
    std::string representative;
    ExtraFields extra = ExtraFields::object();
};

/// Validated in-memory form of one provider's transparency information.
/// Immutable by convention after parse; safe to share across threads.
struct TiltDocument {
    std::string meta_id;
    std::string meta_name; // defaults to meta_id when the document has no meta.name
    ControllerInfo controller;
    std::vector<DataDisclosed> data_disclosed;
    std::vector<std::string> third_country_transfers; // ISO country codes
    ExtraFields meta_extra = ExtraFields::object();
    ExtraFields extra = ExtraFields::object(); // unrecognized top-level branches
};

/// Section letters defined by ISIC rev.4.
bool is_valid_isic_section(char c);

/// Parses a sector string ("J", "J63", "J-63") into section + division.
std::optional<IsicSector> parse_sector(const std::string& text);

} // namespace tiltgraph::tilt
