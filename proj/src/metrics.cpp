#include "tiltgraph/similarity/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace tiltgraph::similarity {

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return a.size();

    // Two-row iteration over the edit matrix.
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});

    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

double levenshtein_normalized(std::string_view a, std::string_view b) {
    const std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

double jaro(std::string_view a, std::string_view b) {
    if (a.empty() || b.empty()) return 0.0;

    const std::size_t window =
        std::max(a.size(), b.size()) / 2 == 0 ? 0 : std::max(a.size(), b.size()) / 2 - 1;

    std::vector<bool> a_matched(a.size(), false);
    std::vector<bool> b_matched(b.size(), false);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(b.size(), i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (b_matched[j] || a[i] != b[j]) continue;
            a_matched[i] = b_matched[j] = true;
            ++matches;
            break;
        }
    }
    if (matches == 0) return 0.0;

    std::size_t transposed = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a_matched[i]) continue;
        while (!b_matched[j]) ++j;
        if (a[i] != b[j]) ++transposed;
        ++j;
    }

    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(transposed) / 2.0;
    return (m / static_cast<double>(a.size()) + m / static_cast<double>(b.size()) + (m - t) / m) / 3.0;
}

double jaro_winkler(std::string_view a, std::string_view b) {
    const double j = jaro(a, b);
    std::size_t prefix = 0;
    const std::size_t limit = std::min({a.size(), b.size(), std::size_t{4}});
    while (prefix < limit && a[prefix] == b[prefix]) ++prefix;
    return j + static_cast<double>(prefix) * 0.1 * (1.0 - j);
}

double sorensen_dice(std::string_view a, std::string_view b) {
    if (a.size() < 2 || b.size() < 2) return a == b ? 1.0 : 0.0;

    std::map<std::pair<char, char>, std::size_t> bigrams;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        ++bigrams[{a[i], a[i + 1]}];
    }
    std::size_t common = 0;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        auto it = bigrams.find({b[i], b[i + 1]});
        if (it != bigrams.end() && it->second > 0) {
            --it->second;
            ++common;
        }
    }
    const std::size_t total = (a.size() - 1) + (b.size() - 1);
    return 2.0 * static_cast<double>(common) / static_cast<double>(total);
}

double score(Metric metric, std::string_view a, std::string_view b) {
    switch (metric) {
    case Metric::levenshtein_normalized: return levenshtein_normalized(a, b);
    case Metric::jaro_winkler: return jaro_winkler(a, b);
    case Metric::sorensen_dice: return sorensen_dice(a, b);
    }
    return 0.0;
}

const char* metric_name(Metric metric) {
    switch (metric) {
    case Metric::levenshtein_normalized: return "levenshtein_normalized";
    case Metric::jaro_winkler: return "jaro_winkler";
    case Metric::sorensen_dice: return "sorensen_dice";
    }
    return "?";
}

bool metric_from_name(std::string_view name, Metric& out) {
    if (name == "levenshtein_normalized" || name == "levenshtein") {
        out = Metric::levenshtein_normalized;
        return true;
    }
    if (name == "jaro_winkler") {
        out = Metric::jaro_winkler;
        return true;
    }
    if (name == "sorensen_dice" || name == "dice") {
        out = Metric::sorensen_dice;
        return true;
    }
    return false;
}

} // namespace tiltgraph::similarity
