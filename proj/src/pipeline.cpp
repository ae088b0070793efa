#include "credmatch/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace credmatch {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Best record per (source, matcher): highest score, first wins on ties.
std::vector<SimilarityRecord> dedupe_top1(const std::vector<SimilarityRecord>& records) {
    std::vector<SimilarityRecord> out;
    for (const auto& rec : records) {
        auto it = std::find_if(out.begin(), out.end(), [&](const SimilarityRecord& r) {
            return r.source == rec.source && r.matcher == rec.matcher;
        });
        if (it == out.end())
            out.push_back(rec);
        else if (rec.score > it->score)
            *it = rec;
    }
    return out;
}

std::vector<SimilarityRecord> records_for(const std::string& source,
                                          const std::vector<SimilarityRecord>& records) {
    std::vector<SimilarityRecord> out;
    for (const auto& rec : records)
        if (rec.source == source) out.push_back(rec);
    return out;
}

}  // namespace

EntityCatalog EntityCatalog::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open catalog file: " + path.string());
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        const std::string label = trim(line);
        if (label.empty() || label.front() == '#') continue;
        labels.push_back(label);
    }
    return from_labels(path.stem().string(), std::move(labels));
}

EntityCatalog EntityCatalog::from_labels(std::string ontology_id,
                                         std::vector<std::string> labels) {
    std::set<std::string> seen;
    for (const auto& label : labels)
        if (!seen.insert(label).second)
            fail(Error::Code::DuplicateLabel,
                 "duplicate entity in catalog " + ontology_id + ": " + label);
    if (labels.empty())
        fail(Error::Code::EmptyInput, "catalog " + ontology_id + " has no entities");
    return EntityCatalog{std::move(ontology_id), std::move(labels)};
}

std::vector<SimilarityRecord> compute_similarities(const EntityCatalog& c1,
                                                   const EntityCatalog& c2,
                                                   const PipelineConfig& config) {
    std::vector<SimilarityRecord> records;
    for (const auto& source : c1.entities) {
        for (MatcherKind kind : config.matchers) {
            double best = -1.0;
            const std::string* best_target = nullptr;
            for (const auto& target : c2.entities) {
                const double s = score(kind, source, target);
                if (s > best) {
                    best = s;
                    best_target = &target;
                }
            }
            if (best_target && best > config.score_threshold)
                records.push_back({kind, source, *best_target, best});
        }
    }
    return records;
}

std::vector<std::string> select_entities(const std::vector<SimilarityRecord>& records,
                                         const PipelineConfig& config) {
    std::vector<std::string> order;
    std::map<std::string, std::size_t> counts;
    for (const auto& rec : records) {
        if (!counts.count(rec.source)) order.push_back(rec.source);
        ++counts[rec.source];
    }
    const std::size_t needed = config.require_all_matchers ? config.matchers.size() : 1;
    std::vector<std::string> out;
    for (const auto& source : order)
        if (counts[source] >= needed) out.push_back(source);
    return out;
}

FramePtr build_frame(const std::vector<SimilarityRecord>& records) {
    std::vector<std::string> targets;
    for (const auto& rec : records)
        if (std::find(targets.begin(), targets.end(), rec.target) == targets.end())
            targets.push_back(rec.target);
    return Frame::make(std::move(targets));
}

std::vector<MassFunction> build_bbas(const std::string& source,
                                     const std::vector<SimilarityRecord>& records,
                                     const FramePtr& frame) {
    std::vector<MassFunction> bbas;
    for (const auto& rec : records) {
        if (rec.source != source) continue;
        if (rec.score <= 0.0 || rec.score > 1.0)
            fail(Error::Code::ScoreOutOfRange,
                 "similarity score for " + source + " must lie in (0,1], got " +
                     std::to_string(rec.score));
        const Mask target = frame->singleton_of(rec.target);
        if (rec.score == 1.0) {
            bbas.push_back(MassFunction::categorical(frame, target));
        } else {
            bbas.push_back(MassFunction::make(
                frame, {{target, rec.score}, {frame->full(), 1.0 - rec.score}}));
        }
    }
    return bbas;
}

CorrespondenceDecision match_entity(const std::string& source,
                                    const std::vector<SimilarityRecord>& records,
                                    const FramePtr& frame, const PipelineConfig& config) {
    const auto own = records_for(source, records);
    auto bbas = build_bbas(source, own, frame);
    if (bbas.empty())
        fail(Error::Code::EmptyInput, "no similarity records for entity " + source);
    MassFunction fused = combine_all(config.combination, bbas);
    DecisionOutcome outcome = decide_min_distance(fused, config.decision);

    std::vector<std::string> decided;
    for (std::size_t i = 0; i < frame->size(); ++i)
        if (outcome.chosen & frame->singleton(i)) decided.push_back(frame->label(i));
    return CorrespondenceDecision{source, std::move(decided), outcome.chosen_value,
                                  std::move(fused), own};
}

AlignmentDocument run_pipeline(const EntityCatalog& c1, const EntityCatalog& c2,
                               const PipelineConfig& config,
                               const std::vector<SimilarityRecord>* injected) {
    AlignmentDocument doc{c1.ontology_id, c2.ontology_id, config, {}, {}};

    std::vector<SimilarityRecord> records;
    if (injected) {
        for (const auto& rec : *injected) {
            if (std::find(c1.entities.begin(), c1.entities.end(), rec.source) ==
                c1.entities.end()) {
                doc.diagnostics.push_back("injected record skipped, unknown source: " +
                                          rec.source);
                continue;
            }
            if (std::find(c2.entities.begin(), c2.entities.end(), rec.target) ==
                c2.entities.end()) {
                doc.diagnostics.push_back("injected record skipped, unknown target: " +
                                          rec.target);
                continue;
            }
            if (rec.score > config.score_threshold) records.push_back(rec);
        }
        records = dedupe_top1(records);
        // Injected records may arrive in any order; cells follow c1.
        std::stable_sort(records.begin(), records.end(),
                         [&](const SimilarityRecord& a, const SimilarityRecord& b) {
                             auto pos = [&](const std::string& s) {
                                 return std::find(c1.entities.begin(), c1.entities.end(),
                                                  s) -
                                        c1.entities.begin();
                             };
                             return pos(a.source) < pos(b.source);
                         });
    } else {
        records = compute_similarities(c1, c2, config);
    }

    const auto selected = select_entities(records, config);
    std::vector<SimilarityRecord> retained;
    for (const auto& rec : records)
        if (std::find(selected.begin(), selected.end(), rec.source) != selected.end())
            retained.push_back(rec);
    if (retained.empty()) return doc;

    const FramePtr frame = build_frame(retained);
    for (const auto& source : selected) {
        try {
            doc.cells.push_back(match_entity(source, retained, frame, config));
        } catch (const Error& e) {
            doc.diagnostics.push_back(source + ": " + e.what());
        }
    }
    return doc;
}

}  // namespace credmatch
