#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "a2r/answers.hpp"
#include "a2r/errors.hpp"

namespace a2r {

class KTooLarge : public Error {
public:
    using Error::Error;
};

class PoolTooSmall : public Error {
public:
    using Error::Error;
};

class MissingRuns : public Error {
public:
    using Error::Error;
};

/// All independent samples collected for one query, verdicts parallel to
/// answers.
struct SampleSet {
    std::string query_id;
    std::vector<bool> verdicts;
    std::vector<CanonicalAnswer> answers;

    std::size_t size() const { return verdicts.size(); }
    std::int64_t correct() const;
};

/// Fraction of correct samples, c/n.
double pass_at_1(const SampleSet& set);

/// Unbiased estimator 1 - C(n-c, k)/C(n, k) in overflow-safe product form.
double pass_at_k(std::int64_t n, std::int64_t c, std::int64_t k);
double pass_at_k(const SampleSet& set, std::int64_t k);

inline constexpr int kDefaultConsTrials = 200;

/// Majority-vote accuracy over n samples drawn from the pool. A pool of
/// exactly n samples is evaluated once, deterministically; larger pools are
/// subsampled without replacement for `trials` seeded rounds (drawn samples
/// keep pool order). Ties go to the class that occurred first.
double cons_at_n(const SampleSet& pool, const CanonicalAnswer& gold, std::int64_t n,
                 int trials = kDefaultConsTrials, std::uint64_t seed = 0);

/// Mean of cons_at_n over per-query pools paired with their gold answers.
double cons_at_n_mean(const std::vector<std::pair<SampleSet, CanonicalAnswer>>& pools,
                      std::int64_t n, int trials = kDefaultConsTrials, std::uint64_t seed = 0);

/// Majority winner of a sample list (first-occurrence tie-break), as the
/// index of the winning vote class.
std::size_t majority_class(const VoteClasses& votes);

/// Percentage of correct synthesized answers, averaged per query over its
/// first `runs` evaluation runs and then across queries.
double a2r_score(const std::vector<std::vector<bool>>& verdicts_by_query, int runs);

/// One rendered row of the evaluation report; percentages in [0, 100].
struct MetricRow {
    std::string label;
    int n_paths = 0;
    int run_count = 0;
    std::int64_t query_count = 0;
    double pass1 = 0.0;
    double cons_n = 0.0;
    double pass_n = 0.0;
    std::optional<double> a2r;  // absent when no synthesis outcomes exist
};

/// Aligned plain-text metric table, percentages to 2 decimals.
std::string render_metric_table(const std::vector<MetricRow>& rows);

/// Same rows as a machine-readable JSON array.
std::string metric_rows_to_json(const std::vector<MetricRow>& rows);

}  // namespace a2r
