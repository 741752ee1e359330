#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tiltgraph/tilt/model.hpp"

namespace tiltgraph::tilt {

/// Parses one TILT interchange document (UTF-8 JSON). Recognized fields are
/// mapped onto TiltDocument; unrecognized keys are preserved in the nearest
/// enclosing `extra`. Throws SyntaxError on malformed JSON, SchemaError when
/// meta._id or controller.name is missing.
TiltDocument parse_tilt(const std::string& raw);

/// Serializes back to interchange JSON (2-space indent, trailing newline).
/// parse -> serialize reproduces all recognized and extra fields; key order
/// and whitespace are canonicalized.
std::string serialize_tilt(const TiltDocument& doc);

TiltDocument load_tilt_file(const std::filesystem::path& path);
void save_tilt_file(const TiltDocument& doc, const std::filesystem::path& path);

/// Loads every *.tilt / *.json file in a directory, sorted by filename.
std::vector<TiltDocument> load_corpus(const std::filesystem::path& dir);

/// Best-effort normalization of a temporal description to days.
/// Understands ISO-8601 durations (P1Y2M10D; Y=365, M=30, W=7 days) and plain
/// English "<n> day(s)/week(s)/month(s)/year(s)" phrases.
std::optional<std::int64_t> parse_ttl_days(const std::string& temporal_description);

} // namespace tiltgraph::tilt
