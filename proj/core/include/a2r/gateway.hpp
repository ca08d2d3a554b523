#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "a2r/answers.hpp"
#include "a2r/errors.hpp"
#include "a2r/stage.hpp"

namespace a2r {

class EndpointUnreachable : public Error {
public:
    using Error::Error;
};

class MalformedResponse : public Error {
public:
    using Error::Error;
};

class MockScriptMiss : public Error {
public:
    using Error::Error;
};

class EmptyBatch : public Error {
public:
    EmptyBatch() : Error("completion batch is empty") {}
};

/// One chat-completion endpoint (or one mock backend instance).
struct EndpointConfig {
    std::string base_url;
    std::string model_name;
    double temperature = 0.7;
    int max_tokens = 8192;
    std::chrono::milliseconds request_timeout{30000};
    int max_retries = 2;
    int concurrency_limit = 4;
    std::chrono::milliseconds backoff_base{500};
    std::string bearer_token_env = "A2R_API_KEY";
    ThinkMarkers think_markers;

    void validate() const;  // throws Error on out-of-range fields
};

struct TokenUsage {
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
    bool estimated = false;  // endpoint omitted usage; counts are approximate
};

struct CompletionResult {
    RawCompletion completion;
    TokenUsage usage;
    std::chrono::milliseconds latency{0};
    int attempt = 1;  // 1-based; at most max_retries + 1
};

struct ChatMessage {
    std::string role;
    std::string content;
};

/// Routing key for scripted backends; ignored by live HTTP endpoints.
struct RequestKey {
    std::string query_id;
    int sample_index = 0;
    Stage stage = Stage::explorer;
};

struct CompletionRequest {
    std::vector<ChatMessage> messages;
    std::int64_t seed = 0;
    RequestKey key;
};

/// Transport for a single completion attempt. Implementations throw
/// EndpointUnreachable for transient failures (which the gateway retries)
/// and MalformedResponse / MockScriptMiss for permanent ones.
class CompletionBackend {
public:
    virtual ~CompletionBackend() = default;
    virtual CompletionResult attempt(const EndpointConfig& endpoint,
                                     const CompletionRequest& request) = 0;
};

/// Chat-completion JSON client (POST {base_url}/v1/chat/completions).
std::unique_ptr<CompletionBackend> make_http_backend();

struct CompletionOutcome {
    std::optional<CompletionResult> result;
    std::string error;

    bool ok() const { return result.has_value(); }
};

/// Retry/backoff and bounded-concurrency wrapper around a backend. The
/// in-flight cap is enforced per gateway instance and shared across all
/// concurrent callers, including overlapping complete_many batches.
class ModelGateway {
public:
    ModelGateway(EndpointConfig config, std::shared_ptr<CompletionBackend> backend);

    const EndpointConfig& config() const { return config_; }

    /// Single completion with retries and exponential backoff.
    CompletionResult complete(const CompletionRequest& request);
    CompletionResult complete(std::vector<ChatMessage> messages, std::int64_t seed,
                              RequestKey key = {});

    /// Issues requests concurrently, never more than concurrency_limit in
    /// flight; results are positional (result i belongs to request i) and a
    /// failing item never aborts its siblings. Throws EmptyBatch.
    std::vector<CompletionOutcome> complete_many(const std::vector<CompletionRequest>& requests);

private:
    class Slot;
    EndpointConfig config_;
    std::shared_ptr<CompletionBackend> backend_;

    std::mutex slots_mutex_;
    std::condition_variable slots_cv_;
    int slots_in_use_ = 0;
};

}  // namespace a2r
