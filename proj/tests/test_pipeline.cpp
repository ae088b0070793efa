#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "credmatch/pipeline.hpp"

using namespace credmatch;

namespace {

EntityCatalog source_catalog() {
    return EntityCatalog::from_labels("o1", {"ConferenceMember"});
}

EntityCatalog target_catalog() {
    return EntityCatalog::from_labels(
        "o2", {"Conference", "Conference_fees", "Conference_document", "Committee",
               "Conference_volume", "Paper", "Review", "Author", "Topic", "Registration"});
}

// Table of published conference scores, one per matcher.
std::vector<SimilarityRecord> conference_scores() {
    return {{MatcherKind::Levenshtein, "ConferenceMember", "Conference_fees", 0.687},
            {MatcherKind::Jaro, "ConferenceMember", "Conference", 0.516},
            {MatcherKind::Hamming, "ConferenceMember", "Conference", 0.625}};
}

// Extra sources so the injected-scores frame spans ten targets.
std::vector<SimilarityRecord> filler_scores(const std::vector<std::string>& sources,
                                            const std::vector<std::string>& targets) {
    std::vector<SimilarityRecord> out;
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (auto kind :
             {MatcherKind::Levenshtein, MatcherKind::Jaro, MatcherKind::Hamming})
            out.push_back({kind, sources[i], targets[i], 0.9});
    return out;
}

}  // namespace

TEST_CASE("compute_similarities picks the best target per matcher") {
    PipelineConfig config;
    auto records = compute_similarities(source_catalog(), target_catalog(), config);
    REQUIRE(records.size() == 3);
    CHECK(records[0].matcher == MatcherKind::Levenshtein);
    CHECK(records[0].target == "Conference_fees");
    CHECK(records[0].score == doctest::Approx(0.6875));
    CHECK(records[2].matcher == MatcherKind::Hamming);
    CHECK(records[2].target == "Conference");
    CHECK(records[2].score == doctest::Approx(0.625));
}

TEST_CASE("identical catalogs self-match with score 1") {
    auto c = EntityCatalog::from_labels("o", {"alpha"});
    PipelineConfig config;
    auto records = compute_similarities(c, c, config);
    REQUIRE(records.size() == 3);
    for (const auto& rec : records) {
        CHECK(rec.target == "alpha");
        CHECK(rec.score == 1.0);
    }
}

TEST_CASE("threshold filters out weak records") {
    PipelineConfig config;
    config.score_threshold = 0.9;
    auto records = compute_similarities(source_catalog(), target_catalog(), config);
    CHECK(records.empty());
}

TEST_CASE("select_entities honors require_all_matchers") {
    PipelineConfig config;
    auto three = conference_scores();
    CHECK(select_entities(three, config) == std::vector<std::string>{"ConferenceMember"});

    auto two = three;
    two.pop_back();
    CHECK(select_entities(two, config).empty());

    config.require_all_matchers = false;
    CHECK(select_entities({three.front()}, config) ==
          std::vector<std::string>{"ConferenceMember"});
}

TEST_CASE("build_frame collects targets in first-appearance order") {
    auto frame = build_frame(conference_scores());
    CHECK(frame->labels() == std::vector<std::string>{"Conference_fees", "Conference"});

    auto single = build_frame({conference_scores().front()});
    CHECK(single->size() == 1);

    std::vector<SimilarityRecord> many;
    for (int i = 0; i < 70; ++i)
        many.push_back({MatcherKind::Levenshtein, "s", "t" + std::to_string(i), 0.5});
    CHECK_THROWS_AS(build_frame(many), Error);
}

TEST_CASE("build_bbas interprets scores as singleton masses") {
    auto records = conference_scores();
    auto frame = build_frame(records);
    auto bbas = build_bbas("ConferenceMember", records, frame);
    REQUIRE(bbas.size() == 3);
    CHECK(bbas[0].mass(frame->singleton_of("Conference_fees")) == doctest::Approx(0.687));
    CHECK(bbas[0].mass(frame->full()) == doctest::Approx(0.313));
    CHECK(bbas[1].mass(frame->singleton_of("Conference")) == doctest::Approx(0.516));

    std::vector<SimilarityRecord> perfect = {
        {MatcherKind::Levenshtein, "x", "Conference", 1.0}};
    auto cat = build_bbas("x", perfect, frame);
    CHECK(cat.front().mass(frame->singleton_of("Conference")) == 1.0);

    std::vector<SimilarityRecord> bad = {{MatcherKind::Jaro, "x", "Conference", 0.0}};
    CHECK_THROWS_AS(build_bbas("x", bad, frame), Error);
}

TEST_CASE("match_entity on the ten-target conference frame") {
    auto c1 = EntityCatalog::from_labels(
        "o1", {"ConferenceMember", "CommitteeMember", "PaperAuthor", "ReviewExpert",
               "TopicArea", "RegistrationDesk", "DocumentDraft", "VolumeEditor",
               "FeePolicy"});
    auto c2 = target_catalog();
    auto records = conference_scores();
    auto filler = filler_scores(
        {"CommitteeMember", "PaperAuthor", "ReviewExpert", "TopicArea",
         "RegistrationDesk", "DocumentDraft", "VolumeEditor", "FeePolicy"},
        {"Committee", "Paper", "Review", "Topic", "Registration", "Conference_document",
         "Conference_volume", "Author"});
    records.insert(records.end(), filler.begin(), filler.end());

    PipelineConfig config;
    config.decision.min_cardinality = 2;  // uncertain (pairwise) decisions only
    auto doc = run_pipeline(c1, c2, config, &records);
    REQUIRE_FALSE(doc.cells.empty());
    const auto& cell = doc.cells.front();
    CHECK(cell.source == "ConferenceMember");
    CHECK(cell.decided == std::vector<std::string>{"Conference_fees", "Conference"});
    CHECK(std::abs(cell.distance - 0.52) < 0.02);
    CHECK(cell.per_matcher.size() == 3);
    CHECK(std::abs(cell.fused.mass(cell.fused.frame()->singleton_of("Conference")) -
                   0.5853) < 5e-5);
}

TEST_CASE("match_entity trivial cases") {
    std::vector<SimilarityRecord> records = {
        {MatcherKind::Levenshtein, "x", "alpha", 1.0}};
    auto frame = build_frame(records);
    PipelineConfig config;
    config.matchers = {MatcherKind::Levenshtein};
    auto cell = match_entity("x", records, frame, config);
    CHECK(cell.decided == std::vector<std::string>{"alpha"});
    CHECK(cell.distance == 0.0);
}

TEST_CASE("run_pipeline on identical catalogs") {
    auto c = EntityCatalog::from_labels("o", {"alpha", "beta", "gamma"});
    PipelineConfig config;
    auto doc = run_pipeline(c, c, config);
    REQUIRE(doc.cells.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(doc.cells[i].source == c.entities[i]);
        CHECK(doc.cells[i].decided == std::vector<std::string>{c.entities[i]});
        CHECK(doc.cells[i].distance == doctest::Approx(0.0));
        CHECK(doc.cells[i].per_matcher.size() == 3);
    }
    CHECK(doc.diagnostics.empty());
}

TEST_CASE("run_pipeline with a prohibitive threshold yields no cells") {
    auto c1 = EntityCatalog::from_labels("o1", {"aaaa"});
    auto c2 = EntityCatalog::from_labels("o2", {"zzzz"});
    PipelineConfig config;
    config.score_threshold = 0.5;
    auto doc = run_pipeline(c1, c2, config);
    CHECK(doc.cells.empty());
}

TEST_CASE("raising the threshold never retains more entities") {
    auto c1 = EntityCatalog::from_labels("o1", {"alpha", "beta", "gamma", "delta"});
    auto c2 = EntityCatalog::from_labels("o2", {"alpaca", "betta", "gamut", "omega"});
    std::size_t prev = 100;
    for (double tau : {0.0, 0.3, 0.5, 0.7, 0.9}) {
        PipelineConfig config;
        config.score_threshold = tau;
        auto doc = run_pipeline(c1, c2, config);
        CHECK(doc.cells.size() <= prev);
        prev = doc.cells.size();
    }
}

TEST_CASE("pipeline output is invariant under target catalog permutation") {
    auto c1 = EntityCatalog::from_labels("o1", {"alpha", "beta", "gamma"});
    std::vector<std::string> targets = {"alphax", "betax", "gammax", "delta", "omega"};
    auto doc = run_pipeline(c1, EntityCatalog::from_labels("o2", targets),
                            PipelineConfig{});

    std::mt19937_64 rng(73);
    for (int iter = 0; iter < 5; ++iter) {
        auto shuffled = targets;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto doc2 = run_pipeline(c1, EntityCatalog::from_labels("o2", shuffled),
                                 PipelineConfig{});
        REQUIRE(doc2.cells.size() == doc.cells.size());
        for (std::size_t i = 0; i < doc.cells.size(); ++i) {
            auto lhs = doc.cells[i].decided;
            auto rhs = doc2.cells[i].decided;
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            CHECK(lhs == rhs);
            CHECK(std::abs(doc.cells[i].distance - doc2.cells[i].distance) < 1e-12);
        }
    }
}

TEST_CASE("catalog loading skips comments and blanks") {
    auto dir = std::filesystem::temp_directory_path() / "credmatch_test_catalog";
    std::filesystem::create_directories(dir);
    const auto path = dir / "cat.txt";
    {
        std::ofstream out(path);
        out << "# header\n\n  alpha  \nbeta\n# trailing\n";
    }
    auto cat = EntityCatalog::load(path);
    CHECK(cat.ontology_id == "cat");
    CHECK(cat.entities == std::vector<std::string>{"alpha", "beta"});
    CHECK_THROWS_AS(EntityCatalog::load(dir / "missing.txt"), std::ios_base::failure);
}
