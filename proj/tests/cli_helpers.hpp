#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace cli {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

// Runs a shell command capturing stdout; stderr is dropped.
inline RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.stdout_text.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string quoted(const std::string& s) { return "'" + s + "'"; }

inline std::filesystem::path fixture_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

// Two-catalog conference fixture with injected scores reproducing the
// published similarity table; nine filler sources widen the frame to ten
// targets.
struct ConferenceFixture {
    std::filesystem::path source_file, target_file, scores_file;
};

inline ConferenceFixture conference_fixture(const std::filesystem::path& dir) {
    ConferenceFixture fx{dir / "source.txt", dir / "target.txt", dir / "scores.json"};
    write_file(fx.source_file,
               "# source ontology entities\n"
               "ConferenceMember\nCommitteeMember\nPaperAuthor\nReviewExpert\n"
               "TopicArea\nRegistrationDesk\nDocumentDraft\nVolumeEditor\nFeePolicy\n");
    write_file(fx.target_file,
               "Conference_fees\nConference\nConference_document\nCommittee\n"
               "Conference_volume\nPaper\nReview\nAuthor\nTopic\nRegistration\n");

    std::string scores = R"([
  {"matcher": "levenshtein", "source": "ConferenceMember", "target": "Conference_fees", "score": 0.687},
  {"matcher": "jaro", "source": "ConferenceMember", "target": "Conference", "score": 0.516},
  {"matcher": "hamming", "source": "ConferenceMember", "target": "Conference", "score": 0.625})";
    const std::pair<const char*, const char*> filler[] = {
        {"CommitteeMember", "Committee"},     {"PaperAuthor", "Paper"},
        {"ReviewExpert", "Review"},           {"TopicArea", "Topic"},
        {"RegistrationDesk", "Registration"}, {"DocumentDraft", "Conference_document"},
        {"VolumeEditor", "Conference_volume"},{"FeePolicy", "Author"}};
    for (const auto& [src, tgt] : filler)
        for (const char* matcher : {"levenshtein", "jaro", "hamming"})
            scores += std::string(",\n  {\"matcher\": \"") + matcher +
                      "\", \"source\": \"" + src + "\", \"target\": \"" + tgt +
                      "\", \"score\": 0.9}";
    scores += "\n]\n";
    write_file(fx.scores_file, scores);
    return fx;
}

}  // namespace cli
