#pragma once

#include <cstddef>
#include <string_view>

namespace tiltgraph::similarity {

/// Edit distance (insert / delete / substitute, all cost 1).
std::size_t levenshtein(std::string_view a, std::string_view b);

/// 1 - d / max(|a|, |b|); 1.0 when both strings are empty.
double levenshtein_normalized(std::string_view a, std::string_view b);

/// Jaro similarity with the m = 0 -> 0 convention, so two empty strings score
/// 0 (equal non-empty strings are the only way to reach 1).
double jaro(std::string_view a, std::string_view b);

/// Jaro-Winkler: jaro + l * p * (1 - jaro) with the canonical p = 0.1,
/// common-prefix length l capped at 4, no boost threshold. Symmetric in its
/// arguments (matching and common prefix are symmetric by construction).
double jaro_winkler(std::string_view a, std::string_view b);

/// Sorensen-Dice over multisets of character bigrams:
/// 2 * |X n Y| / (|X| + |Y|). Strings shorter than 2 characters fall back to
/// exact comparison: 1 if equal, else 0.
double sorensen_dice(std::string_view a, std::string_view b);

enum class Metric { levenshtein_normalized, jaro_winkler, sorensen_dice };

double score(Metric metric, std::string_view a, std::string_view b);
const char* metric_name(Metric metric);
bool metric_from_name(std::string_view name, Metric& out);

} // namespace tiltgraph::similarity
