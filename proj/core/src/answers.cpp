#include "a2r/answers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace a2r {

namespace {

constexpr double kDecimalTolerance = 1e-9;
constexpr std::string_view kBoxedMarker = "\\boxed{";

bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_run = false;
    for (char c : s) {
        if (is_ws(c)) {
            in_run = true;
            continue;
        }
        if (in_run && !out.empty()) out.push_back(' ');
        in_run = false;
        out.push_back(c);
    }
    return out;
}

// True when s starts with '{' whose matching brace is the final character.
bool wrapped_in_braces(std::string_view s) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        if (s[i] == '}') {
            --depth;
            if (depth == 0) return i + 1 == s.size();
        }
    }
    return false;
}

std::string strip_outer_braces(std::string s) {
    std::string_view v = s;
    while (wrapped_in_braces(v)) {
        v.remove_prefix(1);
        v.remove_suffix(1);
        while (!v.empty() && is_ws(v.front())) v.remove_prefix(1);
        while (!v.empty() && is_ws(v.back())) v.remove_suffix(1);
    }
    return std::string(v);
}

struct NumberParts {
    bool negative = false;
    std::string digits;  // no sign, no leading zeros ("0" for zero)
};

// "007" -> "7", "-0" -> "0"; arbitrary length, purely textual.
NumberParts normalize_digits(std::string_view s) {
    NumberParts parts;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        parts.negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::size_t first = 0;
    while (first + 1 < s.size() && s[first] == '0') ++first;
    parts.digits = std::string(s.substr(first));
    if (parts.digits.empty() || parts.digits == "0") {
        parts.digits = "0";
        parts.negative = false;
    }
    return parts;
}

std::string render_integer(const NumberParts& p) {
    return p.negative ? "-" + p.digits : p.digits;
}

bool match_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), is_digit);
}

// Optional sign, digits with one dot; at least one digit somewhere.
bool match_decimal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    std::size_t dot = s.find('.');
    if (dot == std::string_view::npos) return false;
    std::string_view head = s.substr(0, dot);
    std::string_view tail = s.substr(dot + 1);
    if (head.empty() && tail.empty()) return false;
    return std::all_of(head.begin(), head.end(), is_digit) &&
           std::all_of(tail.begin(), tail.end(), is_digit);
}

bool match_rational(std::string_view s, std::string_view& num, std::string_view& den) {
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return false;
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    while (!num.empty() && is_ws(num.back())) num.remove_suffix(1);
    while (!den.empty() && is_ws(den.front())) den.remove_prefix(1);
    return match_integer(num) && match_integer(den);
}

bool parse_i64(std::string_view s, std::int64_t& out) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 18) return false;
    std::int64_t v = 0;
    for (char c : s) {
        if (!is_digit(c)) return false;
        v = v * 10 + (c - '0');
    }
    out = neg ? -v : v;
    return true;
}

CanonicalAnswer normalize_decimal(std::string raw, std::string_view s) {
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::size_t dot = s.find('.');
    std::string_view head = s.substr(0, dot);
    std::string frac(s.substr(dot + 1));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();

    NumberParts ip = normalize_digits(head.empty() ? std::string_view("0") : head);
    if (frac.empty()) {
        ip.negative = negative && ip.digits != "0";
        return {std::move(raw), render_integer(ip), AnswerKind::integer};
    }
    std::string canon = (negative ? "-" : "") + ip.digits + "." + frac;
    return {std::move(raw), std::move(canon), AnswerKind::decimal};
}

CanonicalAnswer normalize_rational(std::string raw, std::string cleaned,
                                   std::string_view num, std::string_view den) {
    std::int64_t n = 0, d = 0;
    if (!parse_i64(num, n) || !parse_i64(den, d)) {
        // Too large to reduce; normalize the parts textually.
        NumberParts np = normalize_digits(num);
        NumberParts dp = normalize_digits(den);
        if (dp.digits == "0") return {std::move(raw), std::move(cleaned), AnswerKind::symbolic};
        bool neg = (np.negative != dp.negative) && np.digits != "0";
        std::string canon = (neg ? "-" : "") + np.digits + "/" + dp.digits;
        return {std::move(raw), std::move(canon), AnswerKind::rational};
    }
    if (d == 0) return {std::move(raw), std::move(cleaned), AnswerKind::symbolic};
    if (n == 0) return {std::move(raw), "0", AnswerKind::integer};

    bool neg = (n < 0) != (d < 0);
    std::uint64_t un = static_cast<std::uint64_t>(n < 0 ? -n : n);
    std::uint64_t ud = static_cast<std::uint64_t>(d < 0 ? -d : d);
    std::uint64_t g = std::gcd(un, ud);
    un /= g;
    ud /= g;
    if (ud == 1) {
        std::string canon = (neg ? "-" : "") + std::to_string(un);
        return {std::move(raw), std::move(canon), AnswerKind::integer};
    }
    std::string canon = (neg ? "-" : "") + std::to_string(un) + "/" + std::to_string(ud);
    return {std::move(raw), std::move(canon), AnswerKind::rational};
}

// Exact value as sign * num / den with both magnitudes <= ~1e18.
struct ExactRational {
    bool negative = false;
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

bool parse_unsigned_digits(std::string_view s, std::uint64_t& out) {
    if (s.empty() || s.size() > 18) return false;
    std::uint64_t v = 0;
    for (char c : s) {
        if (!is_digit(c)) return false;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out = v;
    return true;
}

bool to_exact_rational(const CanonicalAnswer& a, ExactRational& out) {
    std::string_view s = a.canonical;
    if (s.empty()) return false;
    bool neg = false;
    if (s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    std::size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::uint64_t n = 0, d = 0;
        if (!parse_unsigned_digits(s.substr(0, slash), n)) return false;
        if (!parse_unsigned_digits(s.substr(slash + 1), d) || d == 0) return false;
        out = {neg && n != 0, n, d};
        return true;
    }
    std::size_t dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        std::size_t frac_len = s.size() - dot - 1;
        if (frac_len > 18) return false;
        std::uint64_t n = 0;
        if (!parse_unsigned_digits(digits, n)) return false;
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
        out = {neg && n != 0, n, d};
        return true;
    }
    std::uint64_t n = 0;
    if (!parse_unsigned_digits(s, n)) return false;
    out = {neg && n != 0, n, 1};
    return true;
}

bool exact_equal(const ExactRational& a, const ExactRational& b) {
    if (a.num == 0 && b.num == 0) return true;
    if (a.negative != b.negative) return false;
    using u128 = unsigned __int128;
    return static_cast<u128>(a.num) * b.den == static_cast<u128>(b.num) * a.den;
}

bool parse_full_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + s.size() && std::isfinite(out);
}

}  // namespace

RawCompletion segment_completion(std::string text, const ThinkMarkers& markers) {
    RawCompletion out;
    out.text = std::move(text);
    std::size_t close = out.text.rfind(markers.close);
    if (close != std::string::npos) {
        std::string after = out.text.substr(close + markers.close.size());
        if (!after.empty()) {
            std::size_t open = out.text.find(markers.open);
            std::size_t think_begin =
                open != std::string::npos && open < close ? open + markers.open.size() : 0;
            out.think_segment = out.text.substr(think_begin, close - think_begin);
            out.answer_segment = std::move(after);
            return out;
        }
    }
    out.answer_segment = out.text;
    return out;
}

std::string_view to_string(AnswerKind kind) {
    switch (kind) {
        case AnswerKind::integer: return "integer";
        case AnswerKind::rational: return "rational";
        case AnswerKind::decimal: return "decimal";
        case AnswerKind::symbolic: return "symbolic";
    }
    return "symbolic";
}

AnswerKind answer_kind_from_string(std::string_view s) {
    if (s == "integer") return AnswerKind::integer;
    if (s == "rational") return AnswerKind::rational;
    if (s == "decimal") return AnswerKind::decimal;
    return AnswerKind::symbolic;
}

CanonicalAnswer normalize_answer(std::string_view raw) {
    std::string cleaned = strip_outer_braces(collapse_whitespace(raw));

    if (match_integer(cleaned) && !cleaned.empty()) {
        return {std::string(raw), render_integer(normalize_digits(cleaned)), AnswerKind::integer};
    }
    if (match_decimal(cleaned)) {
        return normalize_decimal(std::string(raw), cleaned);
    }
    std::string_view num, den;
    if (match_rational(cleaned, num, den)) {
        return normalize_rational(std::string(raw), cleaned, num, den);
    }
    return {std::string(raw), std::move(cleaned), AnswerKind::symbolic};
}

CanonicalAnswer extract_answer(const RawCompletion& completion) {
    if (completion.text.empty()) throw EmptyCompletion();

    const std::string& seg = completion.answer_segment;

    // Last balanced boxed{...}; an unbalanced occurrence falls back to the
    // previous one.
    std::size_t search_end = seg.size();
    while (true) {
        std::size_t start = seg.rfind(kBoxedMarker, search_end == 0 ? 0 : search_end - 1);
        if (start == std::string::npos || start + kBoxedMarker.size() > search_end) break;
        std::size_t open = start + kBoxedMarker.size() - 1;  // the '{'
        int depth = 0;
        for (std::size_t i = open; i < seg.size(); ++i) {
            if (seg[i] == '{') ++depth;
            if (seg[i] == '}') {
                --depth;
                if (depth == 0) {
                    return normalize_answer(seg.substr(open + 1, i - open - 1));
                }
            }
        }
        if (start == 0) break;
        search_end = start;
    }

    // No boxed marker: take the last non-empty line, flagged symbolic.
    std::size_t end = seg.size();
    while (end > 0) {
        std::size_t line_start = seg.rfind('\n', end - 1);
        std::size_t begin = line_start == std::string::npos ? 0 : line_start + 1;
        std::string_view line(seg.data() + begin, end - begin);
        while (!line.empty() && is_ws(line.back())) line.remove_suffix(1);
        while (!line.empty() && is_ws(line.front())) line.remove_prefix(1);
        if (!line.empty()) {
            CanonicalAnswer ans = normalize_answer(line);
            ans.kind = AnswerKind::symbolic;
            return ans;
        }
        if (line_start == std::string::npos) break;
        end = line_start;
    }
    return {"", "", AnswerKind::symbolic};
}

bool is_equivalent(const CanonicalAnswer& a, const CanonicalAnswer& b) {
    if (a.canonical == b.canonical) return true;

    ExactRational ra, rb;
    if (to_exact_rational(a, ra) && to_exact_rational(b, rb) && exact_equal(ra, rb)) {
        return true;
    }

    // Distinct integers are never merged, no matter how large; beyond the
    // exact-rational digit capacity a double comparison could round them
    // together.
    if (match_integer(a.canonical) && match_integer(b.canonical)) return false;

    double da = 0.0, db = 0.0;
    if (parse_full_double(a.canonical, da) && parse_full_double(b.canonical, db)) {
        return std::abs(da - db) <= kDecimalTolerance;
    }
    return false;
}

VoteClasses classify_votes(const std::vector<CanonicalAnswer>& answers) {
    VoteClasses votes;
    for (std::size_t i = 0; i < answers.size(); ++i) {
        bool placed = false;
        for (auto& cls : votes.classes) {
            if (is_equivalent(cls.representative, answers[i])) {
                cls.member_indices.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            votes.classes.push_back({answers[i], {i}});
        }
    }
    return votes;
}

}  // namespace a2r
