#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace credmatch {

enum class MatcherKind { Levenshtein, Jaro, Hamming };

std::string_view matcher_name(MatcherKind kind);
std::optional<MatcherKind> parse_matcher(std::string_view name);

// Decodes UTF-8 into Unicode scalar values; malformed bytes are kept as
// single-byte code points so the metrics stay total.
std::vector<std::uint32_t> utf8_codepoints(std::string_view text);

std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// 1 - editdistance/max(|a|,|b|); 1 when both empty. Case-sensitive.
double levenshtein_sim(std::string_view a, std::string_view b);

// Standard Jaro: match window floor(max/2)-1, transpositions halved.
double jaro_sim(std::string_view a, std::string_view b);

// Positional matches over the first min(|a|,|b|) code points, divided by
// max(|a|,|b|); extends classical Hamming to unequal lengths.
double hamming_sim(std::string_view a, std::string_view b);

double score(MatcherKind kind, std::string_view a, std::string_view b);

}  // namespace credmatch
