#pragma once

#include <map>
#include <string>
#include <vector>

#include "credmatch/evidence.hpp"

namespace credmatch {

// Candidate generation bounds for the composite-hypothesis rules.
// Cardinalities are clamped to the frame size at evaluation time.
struct DecisionConfig {
    std::size_t min_cardinality = 1;
    std::size_t max_cardinality = 2;
    bool include_full_frame = false;
    double tie_tolerance = 1e-9;
};

struct AppriouParams {
    double r = 1.0;                 // 0 = total indecision, 1 = singleton bias
    std::map<Mask, double> lambda;  // per-subset weights, default 1
    double lambda_default = 1.0;

    double lambda_for(Mask x) const {
        auto it = lambda.find(x);
        return it == lambda.end() ? lambda_default : it->second;
    }
};

struct DecisionOutcome {
    Mask chosen = 0;
    double chosen_value = 0.0;
    bool tie = false;
    std::string rule;
    // Every evaluated candidate with its score (distance for mindist,
    // bel/pl/BetP/Appriou score otherwise), in candidate order.
    std::vector<std::pair<Mask, double>> score_table;
};

// Pignistic probability of a singleton.
double betp(const MassFunction& m, Mask singleton);

// Jaccard similarity between subsets; 1 when both are empty.
double jaccard(Mask a, Mask b);

// sqrt(1/2 (m1-m2)^T D (m1-m2)) over the union of focal elements, with D
// the Jaccard matrix. The restriction is exact: the difference vector is
// zero outside the union.
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

// Non-empty subsets with cardinality in [min,max], ascending by
// (cardinality, mask value); the full frame is appended on request.
std::vector<Mask> candidates(const Frame& frame, const DecisionConfig& config);

DecisionOutcome decide_max_bel(const MassFunction& m);
DecisionOutcome decide_max_pl(const MassFunction& m);
DecisionOutcome decide_max_betp(const MassFunction& m);

// argmax over candidates of m_d(X)·pl(X), m_d(X) = K_d·λ_X/|X|^r with
// K_d normalizing m_d over the candidate set.
DecisionOutcome appriou_decide(const MassFunction& m, const AppriouParams& params,
                               const DecisionConfig& config);

// argmin over candidates of the Jousselme distance between m and the
// candidate's categorical bba. Ties break toward lower cardinality, then
// lower mask value, and are flagged.
DecisionOutcome decide_min_distance(const MassFunction& m, const DecisionConfig& config);

}  // namespace credmatch
