#include "credmatch/combination.hpp"

#include <map>

namespace credmatch {

namespace {

constexpr double kConflictFloor = 1e-12;

using Accumulator = std::map<Mask, double>;

template <typename Combine>
Accumulator cross_product(const MassFunction& m1, const MassFunction& m2,
                          Combine&& combine) {
    require_same_frame(m1, m2);
    Accumulator acc;
    for (const auto& [b, vb] : m1.focal())
        for (const auto& [c, vc] : m2.focal())
            acc[combine(b, c)] += vb * vc;
    return acc;
}

MassFunction normalize_closed(FramePtr frame, Accumulator acc) {
    double empty = 0.0;
    if (auto it = acc.find(0); it != acc.end()) {
        empty = it->second;
        acc.erase(it);
    }
    const double scale = 1.0 - empty;
    if (scale <= kConflictFloor)
        fail(Error::Code::TotalConflict, "total conflict: 1-K <= 1e-12");
    std::vector<MassFunction::Entry> entries;
    entries.reserve(acc.size());
    for (const auto& [mask, value] : acc)
        entries.emplace_back(mask, value / scale);
    return MassFunction::make(std::move(frame), std::move(entries));
}

}  // namespace

std::string_view rule_name(CombinationRule rule) {
    switch (rule) {
        case CombinationRule::Conjunctive: return "conjunctive";
        case CombinationRule::Dempster: return "dempster";
        case CombinationRule::Disjunctive: return "disjunctive";
    }
    return "?";
}

std::optional<CombinationRule> parse_rule(std::string_view name) {
    if (name == "conjunctive") return CombinationRule::Conjunctive;
    if (name == "dempster") return CombinationRule::Dempster;
    if (name == "disjunctive") return CombinationRule::Disjunctive;
    return std::nullopt;
}

MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2) {
    auto acc = cross_product(m1, m2, [](Mask b, Mask c) { return b & c; });
    std::vector<MassFunction::Entry> entries(acc.begin(), acc.end());
    return MassFunction::make_open(m1.frame(), std::move(entries));
}

MassFunction dempster(const MassFunction& m1, const MassFunction& m2) {
    auto acc = cross_product(m1, m2, [](Mask b, Mask c) { return b & c; });
    return normalize_closed(m1.frame(), std::move(acc));
}

MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2) {
    auto acc = cross_product(m1, m2, [](Mask b, Mask c) { return b | c; });
    std::vector<MassFunction::Entry> entries(acc.begin(), acc.end());
    return MassFunction::make_open(m1.frame(), std::move(entries));
}

double conflict(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    double k = 0.0;
    for (const auto& [b, vb] : m1.focal())
        for (const auto& [c, vc] : m2.focal())
            if ((b & c) == 0) k += vb * vc;
    return k;
}

MassFunction combine_all(CombinationRule rule, std::span<const MassFunction> ms) {
    if (ms.empty())
        fail(Error::Code::EmptyInput, "combine_all needs at least one mass function");
    for (std::size_t i = 1; i < ms.size(); ++i)
        require_same_frame(ms[0], ms[i]);
    if (ms.size() == 1) return ms[0];

    if (rule == CombinationRule::Dempster) {
        // Conjunctive fold, single normalization at the end.
        MassFunction folded = conjunctive(ms[0], ms[1]);
        for (std::size_t i = 2; i < ms.size(); ++i)
            folded = conjunctive(folded, ms[i]);
        Accumulator acc;
        for (const auto& [mask, value] : folded.focal()) acc[mask] = value;
        return normalize_closed(ms[0].frame(), std::move(acc));
    }

    auto step = rule == CombinationRule::Conjunctive ? conjunctive : disjunctive;
    MassFunction folded = step(ms[0], ms[1]);
    for (std::size_t i = 2; i < ms.size(); ++i)
        folded = step(folded, ms[i]);
    return folded;
}

}  // namespace credmatch
