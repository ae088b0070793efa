#include "credmatch/string_similarity.hpp"

#include <algorithm>

namespace credmatch {

std::string_view matcher_name(MatcherKind kind) {
    switch (kind) {
        case MatcherKind::Levenshtein: return "levenshtein";
        case MatcherKind::Jaro: return "jaro";
        case MatcherKind::Hamming: return "hamming";
    }
    return "?";
}

std::optional<MatcherKind> parse_matcher(std::string_view name) {
    if (name == "levenshtein") return MatcherKind::Levenshtein;
    if (name == "jaro") return MatcherKind::Jaro;
    if (name == "hamming") return MatcherKind::Hamming;
    return std::nullopt;
}

std::vector<std::uint32_t> utf8_codepoints(std::string_view text) {
    std::vector<std::uint32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        std::size_t len = 1;
        std::uint32_t cp = b0;
        if ((b0 & 0x80) == 0x00) {
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        }
        bool ok = i + len <= text.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto bk = static_cast<unsigned char>(text[i + k]);
            if ((bk & 0xC0) != 0x80)
                ok = false;
            else
                cp = (cp << 6) | (bk & 0x3F);
        }
        if (ok) {
            out.push_back(cp);
            i += len;
        } else {
            out.push_back(b0);
            i += 1;
        }
    }
    return out;
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
    const auto ca = utf8_codepoints(a);
    const auto cb = utf8_codepoints(b);
    std::vector<std::size_t> prev(cb.size() + 1), curr(cb.size() + 1);
    for (std::size_t j = 0; j <= cb.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= ca.size(); ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= cb.size(); ++j) {
            const std::size_t subst = prev[j - 1] + (ca[i - 1] == cb[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, subst});
        }
        std::swap(prev, curr);
    }
    return prev[cb.size()];
}

double levenshtein_sim(std::string_view a, std::string_view b) {
    const std::size_t la = utf8_codepoints(a).size();
    const std::size_t lb = utf8_codepoints(b).size();
    const std::size_t longest = std::max(la, lb);
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein_distance(a, b)) /
                     static_cast<double>(longest);
}

double jaro_sim(std::string_view a, std::string_view b) {
    const auto ca = utf8_codepoints(a);
    const auto cb = utf8_codepoints(b);
    if (ca.empty() && cb.empty()) return 1.0;
    if (ca.empty() || cb.empty()) return 0.0;

    const std::size_t longest = std::max(ca.size(), cb.size());
    const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

    std::vector<bool> matched_a(ca.size()), matched_b(cb.size());
    std::size_t matches = 0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(cb.size(), i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!matched_b[j] && ca[i] == cb[j]) {
                matched_a[i] = matched_b[j] = true;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) return 0.0;

    std::size_t transpositions = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!matched_a[i]) continue;
        while (!matched_b[j]) ++j;
        if (ca[i] != cb[j]) ++transpositions;
        ++j;
    }

    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(transpositions) / 2.0;
    return (m / static_cast<double>(ca.size()) + m / static_cast<double>(cb.size()) +
            (m - t) / m) /
           3.0;
}

double hamming_sim(std::string_view a, std::string_view b) {
    const auto ca = utf8_codepoints(a);
    const auto cb = utf8_codepoints(b);
    const std::size_t longest = std::max(ca.size(), cb.size());
    if (longest == 0) return 1.0;
    std::size_t same = 0;
    const std::size_t shortest = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < shortest; ++i)
        if (ca[i] == cb[i]) ++same;
    return static_cast<double>(same) / static_cast<double>(longest);
}

double score(MatcherKind kind, std::string_view a, std::string_view b) {
    switch (kind) {
        case MatcherKind::Levenshtein: return levenshtein_sim(a, b);
        case MatcherKind::Jaro: return jaro_sim(a, b);
        case MatcherKind::Hamming: return hamming_sim(a, b);
    }
    return 0.0;
}

}  // namespace credmatch
