#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "credmatch/decision.hpp"
#include "credmatch/pipeline.hpp"

namespace credmatch {

// Named bbas over one shared frame, as parsed from a bba JSON document:
//   {"frame": ["l1","l2"], "bbas": [{"name": "...", "masses": {"l1|l2": 0.5, "*": 0.5}}]}
// Subset keys use '|'-joined labels with "*" for the full frame.
struct BbaDocument {
    FramePtr frame;
    std::vector<std::string> names;
    std::vector<MassFunction> bbas;
};

BbaDocument parse_bba_document(const nlohmann::json& j);
BbaDocument load_bba_document(const std::filesystem::path& path);

// Rounds to six decimals; all serialized scores/masses/distances go
// through this so output is stable across platforms.
double round6(double x);

nlohmann::json masses_to_json(const MassFunction& m);
nlohmann::json outcome_to_json(const DecisionOutcome& outcome, const Frame& frame);
nlohmann::json alignment_to_json(const AlignmentDocument& doc);

// Injected-scores file: [{"matcher": "...", "source": "...", "target": "...", "score": 0.7}]
std::vector<SimilarityRecord> parse_scores(const nlohmann::json& j);
std::vector<SimilarityRecord> load_scores(const std::filesystem::path& path);

}  // namespace credmatch
