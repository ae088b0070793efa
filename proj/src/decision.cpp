#include "credmatch/decision.hpp"

#include <algorithm>
#include <cmath>

namespace credmatch {

namespace {

// First-best scan over (mask, score) rows that are already in tie-break
// order; `better` says whether lhs strictly beats rhs.
template <typename Better>
DecisionOutcome pick(std::vector<std::pair<Mask, double>> table, std::string rule,
                     double tolerance, Better&& better) {
    DecisionOutcome out;
    out.rule = std::move(rule);
    out.score_table = std::move(table);
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.score_table.size(); ++i)
        if (better(out.score_table[i].second, out.score_table[best].second)) best = i;
    const double best_value = out.score_table[best].second;
    std::size_t winners = 0;
    for (const auto& [mask, value] : out.score_table) {
        if (std::abs(value - best_value) <= tolerance) {
            if (winners == 0) {
                out.chosen = mask;
                out.chosen_value = value;
            }
            ++winners;
        }
    }
    out.tie = winners > 1;
    return out;
}

std::vector<std::pair<Mask, double>> singleton_table(
    const MassFunction& m, double (*score)(const MassFunction&, Mask)) {
    std::vector<std::pair<Mask, double>> table;
    const std::size_t n = m.frame()->size();
    table.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Mask x = m.frame()->singleton(i);
        table.emplace_back(x, score(m, x));
    }
    return table;
}

DecisionOutcome decide_singleton(const MassFunction& m, std::string rule,
                                 double (*score)(const MassFunction&, Mask)) {
    return pick(singleton_table(m, score), std::move(rule), 1e-9,
                [](double a, double b) { return a > b; });
}

}  // namespace

double betp(const MassFunction& m, Mask singleton) {
    if (cardinality(singleton) != 1)
        fail(Error::Code::NotSingleton, "BetP is defined on singletons");
    const double denom = 1.0 - m.empty_mass();
    if (denom <= 1e-12)
        fail(Error::Code::TotalConflict, "BetP undefined: all mass on the empty set");
    double sum = 0.0;
    for (const auto& [a, v] : m.focal())
        if (a & singleton) sum += v / (static_cast<double>(cardinality(a)) * denom);
    return sum;
}

double jaccard(Mask a, Mask b) {
    if (a == 0 && b == 0) return 1.0;
    const Mask uni = a | b;
    if (uni == 0) return 1.0;
    return static_cast<double>(cardinality(a & b)) / static_cast<double>(cardinality(uni));
}

double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    std::vector<Mask> support;
    support.reserve(m1.focal().size() + m2.focal().size());
    for (const auto& [mask, value] : m1.focal()) support.push_back(mask);
    for (const auto& [mask, value] : m2.focal()) support.push_back(mask);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::vector<double> diff(support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
        diff[i] = m1.mass(support[i]) - m2.mass(support[i]);

    double quad = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < support.size(); ++j)
            quad += diff[i] * jaccard(support[i], support[j]) * diff[j];
    return std::sqrt(std::max(0.0, 0.5 * quad));
}

std::vector<Mask> candidates(const Frame& frame, const DecisionConfig& config) {
    const std::size_t n = frame.size();
    const Mask full = frame.full();
    std::size_t lo = std::clamp<std::size_t>(config.min_cardinality, 1, n);
    std::size_t hi = std::clamp<std::size_t>(config.max_cardinality, lo, n);

    std::vector<Mask> out;
    for (std::size_t c = lo; c <= hi; ++c) {
        // Gosper's hack: next mask with the same popcount, ascending.
        Mask v = (c == 64) ? ~Mask{0} : ((Mask{1} << c) - 1);
        while (v != 0 && v <= full) {
            out.push_back(v);
            Mask u = v & (~v + 1);
            Mask w = v + u;
            if (w == 0 || w > full) break;
            v = w | (((v ^ w) / u) >> 2);
        }
    }
    if (config.include_full_frame && (out.empty() || out.back() != full) &&
        std::find(out.begin(), out.end(), full) == out.end())
        out.push_back(full);
    return out;
}

DecisionOutcome decide_max_bel(const MassFunction& m) {
    return decide_singleton(m, "max_bel",
                            [](const MassFunction& mf, Mask x) { return mf.bel(x); });
}

DecisionOutcome decide_max_pl(const MassFunction& m) {
    return decide_singleton(m, "max_pl",
                            [](const MassFunction& mf, Mask x) { return mf.pl(x); });
}

DecisionOutcome decide_max_betp(const MassFunction& m) {
    return decide_singleton(m, "max_betp",
                            [](const MassFunction& mf, Mask x) { return betp(mf, x); });
}

DecisionOutcome appriou_decide(const MassFunction& m, const AppriouParams& params,
                               const DecisionConfig& config) {
    auto cands = candidates(*m.frame(), config);
    if (cands.empty())
        fail(Error::Code::EmptyCandidateSet, "no decision candidates");

    std::vector<double> weights(cands.size());
    double total = 0.0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        weights[i] = params.lambda_for(cands[i]) /
                     std::pow(static_cast<double>(cardinality(cands[i])), params.r);
        total += weights[i];
    }
    const double kd = total > 0.0 ? 1.0 / total : 0.0;

    std::vector<std::pair<Mask, double>> table;
    table.reserve(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i)
        table.emplace_back(cands[i], kd * weights[i] * m.pl(cands[i]));
    return pick(std::move(table), "appriou", config.tie_tolerance,
                [](double a, double b) { return a > b; });
}

DecisionOutcome decide_min_distance(const MassFunction& m, const DecisionConfig& config) {
    auto cands = candidates(*m.frame(), config);
    if (cands.empty())
        fail(Error::Code::EmptyCandidateSet, "no decision candidates");

    std::vector<std::pair<Mask, double>> table;
    table.reserve(cands.size());
    for (Mask x : cands)
        table.emplace_back(x, jousselme_distance(m, MassFunction::categorical(m.frame(), x)));
    return pick(std::move(table), "mindist", config.tie_tolerance,
                [](double a, double b) { return a < b; });
}

}  // namespace credmatch
