#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>

#include "a2r/gateway.hpp"

namespace a2r {

/// One scripted completion. The first `fail_times` calls for the entry's key
/// fail transiently before the scripted text is served.
struct MockEntry {
    std::string text;
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
    int fail_times = 0;
};

/// Deterministic completion script keyed by (query_id, sample_index, stage).
/// Immutable after load; identical keys always yield identical entries.
class MockScript {
public:
    static MockScript load_jsonl(const std::filesystem::path& file);
    static MockScript parse_jsonl(const std::string& content);

    void add(const std::string& query_id, int sample_index, Stage stage, MockEntry entry);
    const MockEntry* find(const std::string& query_id, int sample_index, Stage stage) const;
    std::size_t size() const { return entries_.size(); }

    static std::string key(const std::string& query_id, int sample_index, Stage stage);

private:
    std::map<std::string, MockEntry> entries_;
};

/// Scripted in-process backend with call instrumentation for tests: per-key
/// call counts and the high-water mark of concurrent attempts.
class MockBackend : public CompletionBackend {
public:
    explicit MockBackend(MockScript script);

    CompletionResult attempt(const EndpointConfig& endpoint,
                             const CompletionRequest& request) override;

    int calls(const std::string& query_id, int sample_index, Stage stage) const;
    int total_calls() const;
    int max_in_flight() const;

    /// True when some key was attempted more than once for reasons other
    /// than its scripted transient failures.
    bool any_duplicate_serves() const;

private:
    MockScript script_;
    mutable std::mutex mutex_;
    std::map<std::string, int> call_counts_;
    std::map<std::string, int> serve_counts_;
    int total_calls_ = 0;
    int in_flight_ = 0;
    int max_in_flight_ = 0;
};

}  // namespace a2r
