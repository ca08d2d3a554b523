#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "a2r/errors.hpp"
#include "a2r/pipeline.hpp"

namespace a2r {

class DatasetParseError : public Error {
public:
    DatasetParseError(const std::string& what, int line) : Error(what), line_number(line) {}
    int line_number = 0;
};

class EmptyRun : public Error {
public:
    using Error::Error;
};

/// Loads a dataset of {id, question, answer} JSONL rows; answers are
/// normalized at load time. Reports the 1-based line number on bad rows.
std::vector<Query> load_dataset_jsonl(const std::filesystem::path& file);

std::uint64_t fnv1a64(std::string_view data);
std::string to_hex(std::uint64_t value);

/// Content digest of a file, used as the dataset identity in run manifests.
std::string file_content_hash(const std::filesystem::path& file);

/// One persisted evaluation: everything needed to recompute metrics, costs,
/// and re-extraction checks offline. Synthesis fields are absent for
/// explorer-only baseline runs.
struct StoredOutcome {
    std::string query_id;
    int run_index = 0;
    std::string question;
    CanonicalAnswer gold;
    std::vector<ReasoningPath> paths;
    std::optional<std::string> synthesis_text;
    std::optional<CanonicalAnswer> final_answer;
    std::optional<bool> verdict;
    OutcomeUsage usage;
};

std::string stored_outcome_to_json_line(const StoredOutcome& outcome);
StoredOutcome stored_outcome_from_json_line(const std::string& line);

/// Append-only JSONL outcome store. Each append is flushed whole-line; a
/// torn final line from a crash is ignored on load and neutralized on the
/// next open.
class OutcomeStore {
public:
    explicit OutcomeStore(std::filesystem::path file);

    void append(const StoredOutcome& outcome);

    static std::vector<StoredOutcome> load(const std::filesystem::path& file);
    static std::set<std::pair<std::string, int>> completed_keys(
        const std::filesystem::path& file);

private:
    std::filesystem::path file_;
    std::ofstream out_;
};

struct RunManifest {
    std::string run_id;
    std::string config_hash;
    std::string dataset_id;
    std::string dataset_path;
    int n_paths = 0;
    int runs = 0;
    std::int64_t base_seed = 0;
    bool with_synthesizer = true;
    std::string explorer_model;
    std::string synthesizer_model;
    std::string template_version;
    std::string started_at;
    std::string finished_at;
};

void save_manifest(const std::filesystem::path& file, const RunManifest& manifest);
RunManifest load_manifest(const std::filesystem::path& file);

}  // namespace a2r
