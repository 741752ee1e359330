#include "tiltgraph/similarity/cleaning.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tiltgraph::similarity {

const std::vector<std::string>& legal_suffixes() {
    static const std::vector<std::string> suffixes = {"ltd", "gmbh", "inc", "llc",
                                                      "ag",  "se",   "co",  "corp"};
    return suffixes;
}

namespace {

bool is_ascii_alnum(unsigned char c) {
    return c < 0x80 && std::isalnum(c) != 0;
}

bool is_space(unsigned char c) {
    return c < 0x80 && std::isspace(c) != 0;
}

std::string strip_trailing_suffix_words(std::string s) {
    const std::vector<std::string>& suffixes = legal_suffixes();
    for (;;) {
        std::size_t end = s.find_last_not_of(" \t\n\r\f\v");
        if (end == std::string::npos) return s;
        std::size_t word_start = s.find_last_of(" \t\n\r\f\v", end);
        word_start = word_start == std::string::npos ? 0 : word_start + 1;
        std::string word = s.substr(word_start, end - word_start + 1);
        std::string lowered = word;
        std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (std::find(suffixes.begin(), suffixes.end(), lowered) == suffixes.end()) return s;
        s.erase(word_start);
    }
}

} // namespace

std::string clean_text(const std::string& s, const CleaningPolicy& policy) {
    std::string out = s;

    if (policy.lowercase) {
        std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
            return c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
        });
    }
    if (policy.strip_punctuation) {
        // Everything outside ASCII alphanumerics becomes a space (multi-byte
        // punctuation decays bytewise and collapses below).
        std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
            return is_ascii_alnum(c) || is_space(c) ? static_cast<char>(c) : ' ';
        });
    }
    if (policy.strip_legal_suffixes) {
        out = strip_trailing_suffix_words(std::move(out));
    }
    if (policy.collapse_whitespace) {
        std::string collapsed;
        collapsed.reserve(out.size());
        bool pending_space = false;
        for (unsigned char c : out) {
            if (is_space(c)) {
                pending_space = !collapsed.empty();
            } else {
                if (pending_space) collapsed.push_back(' ');
                pending_space = false;
                collapsed.push_back(static_cast<char>(c));
            }
        }
        out = std::move(collapsed);
    }
    return out;
}

} // namespace tiltgraph::similarity
