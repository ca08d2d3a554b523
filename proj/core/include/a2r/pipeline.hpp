#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a2r/answers.hpp"
#include "a2r/gateway.hpp"

namespace a2r {

class EmptyPaths : public Error {
public:
    EmptyPaths() : Error("reference requires at least one path") {}
};

class UnorderedPaths : public Error {
public:
    UnorderedPaths() : Error("paths must be index-ordered 0..N-1") {}
};

class EmptyQuestion : public Error {
public:
    EmptyQuestion() : Error("query question is empty") {}
};

class AllPathsFailed : public Error {
public:
    using Error::Error;
};

struct Query {
    std::string id;
    std::string question;
    CanonicalAnswer gold_answer;
};

/// One explorer sample: the reasoning trace plus the answer component (the
/// post-think text, itself a short derivation rather than a bare value).
struct ReasoningPath {
    int index = 0;
    std::string trace;
    std::string answer_component;
    CanonicalAnswer canonical;
    TokenUsage usage;
    bool failed = false;  // permanently failed sample, empty-answer sentinel
};

/// Ordered concatenation of answer components with numbered tag markup:
/// block k sits verbatim between <reference{k+1}> and </reference{k+1}>.
struct ReferenceContext {
    std::vector<std::string> blocks;
    std::string rendered;
};

struct StageTotals {
    std::int64_t calls = 0;
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
    std::int64_t estimated_input_tokens = 0;   // from usage-estimated results
    std::int64_t estimated_output_tokens = 0;

    void add(const TokenUsage& usage);
};

struct OutcomeUsage {
    StageTotals explorer;
    StageTotals synthesizer;
};

struct A2ROutcome {
    std::string query_id;
    std::vector<ReasoningPath> paths;
    RawCompletion synthesis;
    CanonicalAnswer final_answer;
    bool verdict = false;
    OutcomeUsage stage_usage;
};

/// Synthesis-stage failure; the explorer paths and their usage are kept for
/// salvage reporting.
class SynthesizerFailed : public Error {
public:
    SynthesizerFailed(const std::string& what, std::string query_id,
                      std::vector<ReasoningPath> paths, OutcomeUsage usage)
        : Error(what),
          query_id(std::move(query_id)),
          paths(std::move(paths)),
          stage_usage(usage) {}

    std::string query_id;
    std::vector<ReasoningPath> paths;
    OutcomeUsage stage_usage;
};

inline constexpr int kDefaultContextBudget = 24000;

/// Instruction line of the synthesis prompt; also used to recognize
/// synthesis-stage requests on the scripted HTTP server.
inline constexpr std::string_view kSynthesizerInstruction =
    "Instruction: You can solve the problem using the provided references, or you can choose "
    "to find a new solution. The final answer should be placed in boxed{}.";

/// Bumped whenever the prompt shape changes; part of the run config hash so
/// stored runs cannot silently mix prompt variants.
inline constexpr std::string_view kPromptTemplateVersion = "a2r-prompt-v1";

/// Samples n_paths completions concurrently, one request per path. Path i of
/// run r uses seed base_seed + r*n_paths + i and the matching scripted
/// sample index. A permanently failed sample becomes an empty-answer
/// sentinel path; throws AllPathsFailed when no sample survives.
std::vector<ReasoningPath> run_explorer(const Query& query, ModelGateway& gateway, int n_paths,
                                        std::int64_t base_seed, int run_index = 0);

/// Renders <reference1>..</reference1>... from index-ordered paths, no
/// separators. When the rendered context would exceed the character budget,
/// each block keeps only its tail (the conclusion end of the derivation).
ReferenceContext build_reference(const std::vector<ReasoningPath>& paths,
                                 int context_budget_chars = kDefaultContextBudget);

/// Instruction / Query / Reference template, newline-separated.
std::string compose_synthesizer_prompt(const Query& query, const ReferenceContext& ref);

/// Full two-stage evaluation of one query: explorer fan-out, reference
/// construction, one synthesis completion, verdict against gold.
A2ROutcome run_a2r(const Query& query, ModelGateway& explorer, ModelGateway& synthesizer,
                   int n_paths, std::int64_t base_seed, int run_index = 0,
                   int context_budget_chars = kDefaultContextBudget);

}  // namespace a2r
