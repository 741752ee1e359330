#include "tiltgraph/tilt/model.hpp"

#include <cctype>

namespace tiltgraph::tilt {

bool is_valid_isic_section(char c) {
    return c >= 'A' && c <= 'U';
}

std::optional<IsicSector> parse_sector(const std::string& text) {
    if (text.empty()) return std::nullopt;
    char section = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (!is_valid_isic_section(section)) return std::nullopt;
    std::string division = text.substr(1);
    if (!division.empty() && (division[0] == '-' || division[0] == '_' || division[0] == ' ')) {
        division.erase(0, 1);
    }
    return IsicSector{section, division};
}

LegalBasisRef LegalBasisRef::parse(const std::string& text) {
    LegalBasisRef ref;
    ref.raw = text;

    // GDPR-<article>-<paragraph>-<letter>, e.g. GDPR-6-1-f
    if (text.rfind("GDPR-", 0) != 0) return ref;
    std::size_t pos = 5;
    auto read_int = [&](int& out) {
        std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start || value > 1000) return false;
        out = static_cast<int>(value);
        return true;
    };

    GdprRef g;
    if (!read_int(g.article)) return ref;
    if (pos >= text.size() || text[pos] != '-') return ref;
    ++pos;
    if (!read_int(g.paragraph)) return ref;
    if (pos >= text.size() || text[pos] != '-') return ref;
    ++pos;
    if (pos + 1 != text.size()) return ref;
    char letter = text[pos];
    if (!std::islower(static_cast<unsigned char>(letter))) return ref;
    g.letter = letter;
    ref.gdpr = g;
    return ref;
}

} // namespace tiltgraph::tilt
