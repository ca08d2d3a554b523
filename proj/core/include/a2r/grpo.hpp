#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "a2r/answers.hpp"
#include "a2r/errors.hpp"

namespace a2r {

class DegenerateGroup : public Error {
public:
    DegenerateGroup() : Error("group rewards have zero standard deviation") {}
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class TooFewCandidates : public Error {
public:
    using Error::Error;
};

class OffPolicyPlan : public Error {
public:
    using Error::Error;
};

/// Per-token log-probabilities of one sampled response under the current
/// and the sampling-time policy, aligned by position.
struct TokenSequence {
    std::vector<double> logp_new;
    std::vector<double> logp_old;

    std::size_t length() const { return logp_new.size(); }
};

/// A group of G responses to one (query, reference-context) prompt with
/// their scalar rewards.
struct GroupBatch {
    std::vector<TokenSequence> responses;
    std::vector<double> rewards;
    std::string query_context;

    std::size_t group_size() const { return rewards.size(); }
};

struct ClipConfig {
    double epsilon = 0.2;  // symmetric low/high clipping bound, 0 < eps < 1
};

struct LengthPenaltyConfig {
    std::int64_t soft_limit = 0;
    std::int64_t hard_limit = 0;
    bool enabled = false;
};

/// 1 iff the predicted answer is equivalent to gold.
int binary_reward(const CanonicalAnswer& predicted, const CanonicalAnswer& gold);

/// Accepts a group only when its rewards are not all equal; uniform groups
/// carry no learning signal (their standardized advantages vanish).
bool dynamic_sampling_filter(const GroupBatch& batch);

/// (R_i - mean) / population-std over the group. Throws DegenerateGroup when
/// the std is zero (only reachable if the sampling filter was bypassed).
std::vector<double> standardized_advantages(const std::vector<double>& rewards);

struct ObjectiveResult {
    double objective = 0.0;
    std::vector<std::vector<double>> per_token_terms;
};

/// Token-level clipped surrogate: per token,
/// min(r * A, clip(r, 1-eps, 1+eps) * A) with r = exp(logp_new - logp_old)
/// and the response advantage broadcast to each of its tokens; the sum is
/// normalized by the total token count of the group.
ObjectiveResult token_objective(const GroupBatch& batch, const std::vector<double>& advantages,
                                const ClipConfig& clip);

/// Reward delta in [-1, 0]: zero up to soft_limit, linear ramp to -1 at
/// hard_limit, saturated beyond. Returns 0 when disabled.
double length_penalty(std::int64_t length, const LengthPenaltyConfig& cfg);

/// Adds the length penalty of each response to its reward (before
/// standardization).
std::vector<double> apply_length_penalty(std::vector<double> rewards,
                                         const std::vector<std::int64_t>& lengths,
                                         const LengthPenaltyConfig& cfg);

/// Test-fixture loader: {"groups":[{"rewards":[...],
/// "responses":[{"logp_new":[...],"logp_old":[...]}]}]}.
std::vector<GroupBatch> load_group_batches(const std::filesystem::path& file);

// ---------------------------------------------------------------------------
// Training-data curation from stored explorer rollouts.

struct CandidateAnswer {
    std::string answer_component;
};

struct QueryRollout {
    std::string query_id;
    std::string question;
    CanonicalAnswer gold;
    std::vector<CandidateAnswer> candidates;
};

/// One (q, r_ref, a) record: the reference blocks a trainer will render into
/// the synthesis prompt, plus the gold answer.
struct TrainingRecord {
    std::string query_id;
    std::string question;
    std::vector<std::string> reference_blocks;
    std::string gold_answer;
};

struct CurationConfig {
    int n_blocks = 4;           // reference blocks per record
    int records_per_query = 1;  // distinct shuffled subsets per query
    int max_candidates = 16;    // cap on valid candidates considered per query
    std::uint64_t seed = 0;
};

struct CurationStats {
    std::string query_id;
    int valid_candidates = 0;
    bool skipped = false;
};

struct CurationResult {
    std::vector<TrainingRecord> records;
    std::vector<CurationStats> per_query;
};

/// For each query, emits records whose reference blocks are a seeded random
/// ordered subset of the valid (non-empty) candidate answers. Queries with
/// fewer than n_blocks valid candidates are skipped and reported.
/// Identical inputs and seed reproduce the record stream exactly.
CurationResult curate_training_records(const std::vector<QueryRollout>& rollouts,
                                       const CurationConfig& cfg);

/// Curation for a single query; throws TooFewCandidates instead of skipping.
std::vector<TrainingRecord> curate_query(const QueryRollout& rollout, const CurationConfig& cfg);

std::string training_record_to_json_line(const TrainingRecord& record);

// ---------------------------------------------------------------------------
// Batch-plan contract emitted for external trainers.

struct TrainPlan {
    int train_batch_size = 32;
    int mini_batch_size = 32;
    double temperature = 0.7;
    int max_sequence_length = 8192;
    double clip_epsilon = 0.2;
};

/// Throws OffPolicyPlan unless train_batch_size == mini_batch_size: every
/// update must use freshly sampled responses.
void validate_on_policy(const TrainPlan& plan);

std::string train_plan_to_json(const TrainPlan& plan);
TrainPlan train_plan_from_json(const std::string& content);

}  // namespace a2r
