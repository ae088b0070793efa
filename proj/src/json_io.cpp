#include "credmatch/json_io.hpp"

#include <cmath>
#include <fstream>

namespace credmatch {

namespace {

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open file: " + path.string());
    return nlohmann::json::parse(in);
}

std::string subset_key(const Frame& frame, Mask m) {
    return m == frame.full() ? "*" : frame.subset_name(m);
}

}  // namespace

double round6(double x) { return std::round(x * 1e6) / 1e6; }

BbaDocument parse_bba_document(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("frame") || !j["frame"].is_array())
        fail(Error::Code::BadInput, "bba document needs a \"frame\" label array");
    std::vector<std::string> labels;
    for (const auto& l : j["frame"]) {
        if (!l.is_string()) fail(Error::Code::BadInput, "frame labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    BbaDocument doc;
    doc.frame = Frame::make(std::move(labels));

    if (!j.contains("bbas") || !j["bbas"].is_array() || j["bbas"].empty())
        fail(Error::Code::BadInput, "bba document needs a non-empty \"bbas\" array");
    for (const auto& entry : j["bbas"]) {
        if (!entry.is_object() || !entry.contains("masses") ||
            !entry["masses"].is_object())
            fail(Error::Code::BadInput, "each bba needs a \"masses\" object");
        std::vector<MassFunction::Entry> assignments;
        for (const auto& [key, value] : entry["masses"].items()) {
            if (!value.is_number())
                fail(Error::Code::BadInput, "mass for " + key + " must be a number");
            assignments.emplace_back(doc.frame->parse_subset(key), value.get<double>());
        }
        doc.names.push_back(entry.value("name", "bba" + std::to_string(doc.bbas.size() + 1)));
        doc.bbas.push_back(MassFunction::make(doc.frame, std::move(assignments)));
    }
    return doc;
}

BbaDocument load_bba_document(const std::filesystem::path& path) {
    return parse_bba_document(load_json(path));
}

nlohmann::json masses_to_json(const MassFunction& m) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [mask, value] : m.focal())
        out[subset_key(*m.frame(), mask)] = round6(value);
    return out;
}

nlohmann::json outcome_to_json(const DecisionOutcome& outcome, const Frame& frame) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [mask, value] : outcome.score_table)
        table.push_back({{"subset", subset_key(frame, mask)}, {"value", round6(value)}});
    return {{"rule", outcome.rule},
            {"chosen", subset_key(frame, outcome.chosen)},
            {"value", round6(outcome.chosen_value)},
            {"tie", outcome.tie},
            {"table", std::move(table)}};
}

nlohmann::json alignment_to_json(const AlignmentDocument& doc) {
    nlohmann::json matchers = nlohmann::json::array();
    for (MatcherKind kind : doc.config.matchers)
        matchers.push_back(std::string(matcher_name(kind)));
    nlohmann::json config = {
        {"matchers", std::move(matchers)},
        {"threshold", doc.config.score_threshold},
        {"combination", std::string(rule_name(doc.config.combination))},
        {"decision",
         {{"min_cardinality", doc.config.decision.min_cardinality},
          {"max_cardinality", doc.config.decision.max_cardinality},
          {"include_full_frame", doc.config.decision.include_full_frame}}},
        {"require_all_matchers", doc.config.require_all_matchers}};

    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : doc.cells) {
        nlohmann::json per_matcher = nlohmann::json::array();
        for (const auto& rec : cell.per_matcher)
            per_matcher.push_back({{"matcher", std::string(matcher_name(rec.matcher))},
                                   {"target", rec.target},
                                   {"score", round6(rec.score)}});
        cells.push_back({{"source", cell.source},
                         {"decided", cell.decided},
                         {"distance", round6(cell.distance)},
                         {"fused", masses_to_json(cell.fused)},
                         {"per_matcher", std::move(per_matcher)}});
    }
    return {{"source_ontology", doc.source_ontology},
            {"target_ontology", doc.target_ontology},
            {"config", std::move(config)},
            {"cells", std::move(cells)},
            {"diagnostics", doc.diagnostics}};
}

std::vector<SimilarityRecord> parse_scores(const nlohmann::json& j) {
    if (!j.is_array())
        fail(Error::Code::BadInput, "scores file must hold a JSON array");
    std::vector<SimilarityRecord> records;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("matcher") || !entry.contains("source") ||
            !entry.contains("target") || !entry.contains("score"))
            fail(Error::Code::BadInput,
                 "each score record needs matcher/source/target/score");
        const auto kind = parse_matcher(entry["matcher"].get<std::string>());
        if (!kind)
            fail(Error::Code::BadInput,
                 "unknown matcher: " + entry["matcher"].get<std::string>());
        records.push_back({*kind, entry["source"].get<std::string>(),
                           entry["target"].get<std::string>(),
                           entry["score"].get<double>()});
    }
    return records;
}

std::vector<SimilarityRecord> load_scores(const std::filesystem::path& path) {
    return parse_scores(load_json(path));
}

}  // namespace credmatch
