#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "credmatch/combination.hpp"
#include "credmatch/decision.hpp"
#include "credmatch/evidence.hpp"
#include "credmatch/string_similarity.hpp"

namespace credmatch {

struct EntityCatalog {
    std::string ontology_id;
    std::vector<std::string> entities;  // unique labels, order preserved

    // One label per line; blank lines and '#' comments ignored.
    static EntityCatalog load(const std::filesystem::path& path);
    static EntityCatalog from_labels(std::string ontology_id,
                                     std::vector<std::string> labels);
};

struct SimilarityRecord {
    MatcherKind matcher;
    std::string source;
    std::string target;
    double score;
};

struct PipelineConfig {
    std::vector<MatcherKind> matchers = {MatcherKind::Levenshtein, MatcherKind::Jaro,
                                         MatcherKind::Hamming};
    double score_threshold = 0.0;
    CombinationRule combination = CombinationRule::Dempster;
    DecisionConfig decision;
    bool require_all_matchers = true;
};

struct CorrespondenceDecision {
    std::string source;
    std::vector<std::string> decided;  // target labels of the chosen subset
    double distance;
    MassFunction fused;
    std::vector<SimilarityRecord> per_matcher;
};

struct AlignmentDocument {
    std::string source_ontology;
    std::string target_ontology;
    PipelineConfig config;
    std::vector<CorrespondenceDecision> cells;
    std::vector<std::string> diagnostics;
};

// Per matcher and source entity: the best-scoring target (first wins on
// ties), kept when score > threshold. Records are source-major, matchers
// in config order.
std::vector<SimilarityRecord> compute_similarities(const EntityCatalog& c1,
                                                   const EntityCatalog& c2,
                                                   const PipelineConfig& config);

// Source entities retained for matching, in first-appearance order.
std::vector<std::string> select_entities(const std::vector<SimilarityRecord>& records,
                                         const PipelineConfig& config);

// One global frame over all distinct target labels of the retained
// records, in first-appearance order.
FramePtr build_frame(const std::vector<SimilarityRecord>& records);

// One bba per record of the entity: m({target}) = score, m(Θ) = 1-score.
std::vector<MassFunction> build_bbas(const std::string& source,
                                     const std::vector<SimilarityRecord>& records,
                                     const FramePtr& frame);

CorrespondenceDecision match_entity(const std::string& source,
                                    const std::vector<SimilarityRecord>& records,
                                    const FramePtr& frame, const PipelineConfig& config);

// Full run. When `injected` is non-null it replaces computed similarities
// (after the same threshold/top-1 filtering), enabling exact replays.
AlignmentDocument run_pipeline(const EntityCatalog& c1, const EntityCatalog& c2,
                               const PipelineConfig& config,
                               const std::vector<SimilarityRecord>* injected = nullptr);

}  // namespace credmatch
