#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "credmatch/combination.hpp"
#include "credmatch/decision.hpp"
#include "credmatch/json_io.hpp"
#include "credmatch/pipeline.hpp"
#include "credmatch/string_similarity.hpp"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

void emit(const nlohmann::json& j, const std::string& output_path) {
    const std::string text = j.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::ios_base::failure("cannot write file: " + output_path);
        out << text;
    }
}

struct MatchArgs {
    std::string source, target, scores, output;
    std::vector<std::string> matchers = {"levenshtein", "jaro", "hamming"};
    double threshold = 0.0;
    std::size_t kmax = 2, kmin = 1;
    std::string rule = "dempster";
    bool any_matcher = false;
};

int run_match(const MatchArgs& args) {
    credmatch::PipelineConfig config;
    config.matchers.clear();
    for (const auto& name : args.matchers)
        config.matchers.push_back(*credmatch::parse_matcher(name));
    config.score_threshold = args.threshold;
    config.combination = *credmatch::parse_rule(args.rule);
    config.decision.max_cardinality = args.kmax;
    config.decision.min_cardinality = args.kmin;
    config.require_all_matchers = !args.any_matcher;

    const auto c1 = credmatch::EntityCatalog::load(args.source);
    const auto c2 = credmatch::EntityCatalog::load(args.target);

    std::vector<credmatch::SimilarityRecord> injected;
    const bool use_injected = !args.scores.empty();
    if (use_injected) injected = credmatch::load_scores(args.scores);

    const auto doc = credmatch::run_pipeline(c1, c2, config,
                                             use_injected ? &injected : nullptr);
    emit(credmatch::alignment_to_json(doc), args.output);
    return 0;
}

int run_combine(const std::string& bbas_path, const std::string& rule_name) {
    const auto doc = credmatch::load_bba_document(bbas_path);
    const auto rule = *credmatch::parse_rule(rule_name);
    const auto combined = credmatch::combine_all(rule, doc.bbas);
    nlohmann::json out = {{"frame", doc.frame->labels()},
                          {"rule", rule_name},
                          {"masses", credmatch::masses_to_json(combined)}};
    emit(out, "");
    return 0;
}

int run_decide(const std::string& bba_path, const std::string& rule, std::size_t kmax,
               std::size_t kmin, double r) {
    const auto doc = credmatch::load_bba_document(bba_path);
    const auto& m = doc.bbas.front();
    credmatch::DecisionConfig config;
    config.max_cardinality = kmax;
    config.min_cardinality = kmin;

    credmatch::DecisionOutcome outcome;
    if (rule == "mindist") {
        outcome = credmatch::decide_min_distance(m, config);
    } else if (rule == "betp") {
        outcome = credmatch::decide_max_betp(m);
    } else if (rule == "bel") {
        outcome = credmatch::decide_max_bel(m);
    } else if (rule == "pl") {
        outcome = credmatch::decide_max_pl(m);
    } else {
        credmatch::AppriouParams params;
        params.r = r;
        outcome = credmatch::appriou_decide(m, params, config);
    }
    emit(credmatch::outcome_to_json(outcome, *doc.frame), "");
    return 0;
}

int run_sim(const std::string& matcher, const std::string& a, const std::string& b) {
    const auto kind = *credmatch::parse_matcher(matcher);
    std::printf("%.6f\n", credmatch::score(kind, a, b));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Belief-function evidence fusion and entity matching"};
    app.require_subcommand(1);

    const std::vector<std::string> matcher_names = {"levenshtein", "jaro", "hamming"};
    const std::vector<std::string> comb_rules = {"conjunctive", "dempster", "disjunctive"};

    MatchArgs match_args;
    auto* match = app.add_subcommand("match", "Match two entity catalogs");
    match->add_option("--source", match_args.source, "Source catalog file")->required();
    match->add_option("--target", match_args.target, "Target catalog file")->required();
    match->add_option("--matchers", match_args.matchers, "Matchers to apply")
        ->delimiter(',')
        ->check(CLI::IsMember(matcher_names));
    match->add_option("--threshold", match_args.threshold, "Minimum similarity score")
        ->check(CLI::Range(0.0, 1.0));
    match->add_option("--kmax", match_args.kmax, "Maximum decision cardinality");
    match->add_option("--kmin", match_args.kmin, "Minimum decision cardinality");
    match->add_option("--rule", match_args.rule, "Combination rule")
        ->check(CLI::IsMember(comb_rules));
    match->add_option("--scores", match_args.scores, "Injected similarity scores (JSON)");
    match->add_option("--output", match_args.output, "Output file (default stdout)");
    match->add_flag("--any-matcher", match_args.any_matcher,
                    "Keep entities matched by at least one matcher");

    std::string combine_bbas, combine_rule = "dempster";
    auto* combine = app.add_subcommand("combine", "Combine bbas from a JSON file");
    combine->add_option("--bbas", combine_bbas, "bba document (JSON)")->required();
    combine->add_option("--rule", combine_rule, "Combination rule")
        ->check(CLI::IsMember(comb_rules));

    std::string decide_bba, decide_rule = "mindist";
    std::size_t decide_kmax = 2, decide_kmin = 1;
    double decide_r = 1.0;
    auto* decide = app.add_subcommand("decide", "Decide on a bba from a JSON file");
    decide->add_option("--bba", decide_bba, "bba document (JSON)")->required();
    decide->add_option("--rule", decide_rule, "Decision rule")
        ->check(CLI::IsMember(std::vector<std::string>{"mindist", "betp", "bel", "pl",
                                                       "appriou"}));
    decide->add_option("--kmax", decide_kmax, "Maximum candidate cardinality");
    decide->add_option("--kmin", decide_kmin, "Minimum candidate cardinality");
    decide->add_option("--r", decide_r, "Appriou cardinality exponent")
        ->check(CLI::Range(0.0, 1.0));

    std::string sim_matcher, sim_a, sim_b;
    auto* sim = app.add_subcommand("sim", "Score one string pair");
    sim->add_option("--matcher", sim_matcher, "Matcher name")
        ->required()
        ->check(CLI::IsMember(matcher_names));
    sim->add_option("a", sim_a, "First string")->required();
    sim->add_option("b", sim_b, "Second string")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        if (match->parsed()) return run_match(match_args);
        if (combine->parsed()) return run_combine(combine_bbas, combine_rule);
        if (decide->parsed())
            return run_decide(decide_bba, decide_rule, decide_kmax, decide_kmin, decide_r);
        return run_sim(sim_matcher, sim_a, sim_b);
    } catch (const credmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    }
}
