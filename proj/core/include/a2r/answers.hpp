#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a2r/errors.hpp"

namespace a2r {

class EmptyCompletion : public Error {
public:
    EmptyCompletion() : Error("completion text is empty") {}
};

/// Delimiters separating a model's reasoning stream from its answer text.
struct ThinkMarkers {
    std::string open = "<think>";
    std::string close = "</think>";
};

/// A model completion split into its reasoning and answer parts.
///
/// `answer_segment` is the text after the closing think marker. When the
/// markers are absent (or nothing follows them) the whole completion is the
/// answer segment, so it is never empty for non-empty text.
struct RawCompletion {
    std::string text;
    std::optional<std::string> think_segment;
    std::string answer_segment;
};

RawCompletion segment_completion(std::string text, const ThinkMarkers& markers = {});

enum class AnswerKind { integer, rational, decimal, symbolic };

std::string_view to_string(AnswerKind kind);
AnswerKind answer_kind_from_string(std::string_view s);

/// An extracted answer together with its normalized comparison form.
///
/// `canonical` is whitespace-collapsed, stripped of redundant outer braces,
/// and numerically normalized (signs, leading/trailing zeros, reduced
/// fractions). Normalizing a canonical string returns it unchanged.
struct CanonicalAnswer {
    std::string raw;
    std::string canonical;
    AnswerKind kind = AnswerKind::symbolic;
};

/// Normalizes an answer string and classifies it as integer / rational /
/// decimal / symbolic.
CanonicalAnswer normalize_answer(std::string_view raw);

/// Pulls the final answer out of a completion: the contents of the last
/// balanced boxed{...} marker in the answer segment, or the last non-empty
/// line (flagged symbolic) when no marker exists.
///
/// Throws EmptyCompletion for empty text.
CanonicalAnswer extract_answer(const RawCompletion& completion);

/// Equivalence used for verdicts and rewards: canonical strings equal, or
/// both exact rationals with equal value, or both numeric within an absolute
/// tolerance of 1e-9. Unparseable inputs fall back to string equality.
/// Reflexive and symmetric; NOT transitive (decimal tolerance).
bool is_equivalent(const CanonicalAnswer& a, const CanonicalAnswer& b);

struct VoteClass {
    CanonicalAnswer representative;
    std::vector<std::size_t> member_indices;
};

/// Partition of answer indices into equivalence-vote classes, ordered by the
/// first occurrence of each class representative.
struct VoteClasses {
    std::vector<VoteClass> classes;
};

/// Greedy first-fit grouping in index order: each answer joins the first
/// class whose representative it is equivalent to, else founds a new class.
/// Greedy classing keeps the result deterministic even though pairwise
/// equivalence is not transitive.
VoteClasses classify_votes(const std::vector<CanonicalAnswer>& answers);

}  // namespace a2r
