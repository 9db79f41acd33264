#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mgcd/langid.hpp"

namespace mgcd {

enum class SpanKind { comment, string, identifier, code, error };

std::string_view to_string(SpanKind kind);

// A contiguous slice of the input. Spans are non-overlapping, ordered, and
// concatenating their texts reproduces the input exactly.
struct LexSpan {
    SpanKind kind;
    int start_line = 1;  // 1-based
    int end_line = 1;
    std::string text;
};

enum class StatementRule { semicolon, line_based };
enum class BlockStyle { braces, indentation };

struct StringDelimiter {
    std::string open;
    std::string close;
    bool multi_line = false;      // single-line strings error out at newline
    bool backslash_escape = true;
    bool doubled_close_escape = false;  // "" inside verbatim strings
};

struct LanguageProfile {
    LanguageLabel language;
    std::vector<std::string> line_comment_markers;
    std::vector<std::pair<std::string, std::string>> block_comment_pairs;
    std::vector<StringDelimiter> string_delimiters;
    std::vector<std::string> string_prefixes;  // identifier-like prefixes glued to a quote
    std::unordered_set<std::string> keywords;
    std::unordered_set<std::string> decision_keywords;
    std::vector<std::string> logical_operators;
    StatementRule statement_rule = StatementRule::semicolon;
    BlockStyle block_style = BlockStyle::braces;
    // Line endings that terminate a statement anyway (go's i++ / i--).
    std::vector<std::string> complete_line_suffixes;
};

const LanguageProfile& profile_for(LanguageLabel language);

struct ScanResult {
    std::vector<LexSpan> spans;
    int open_brackets_at_eof = 0;     // (, [, { left unclosed in code
    bool unterminated_at_eof = false; // string or block comment runs to EOF
    std::vector<int> line_bracket_depth;  // ()/[] depth at the start of each line
};

// Never fails on malformed input; unterminated constructs and unbalanced
// closers become error spans.
ScanResult scan_full(std::string_view code, LanguageLabel language);
std::vector<LexSpan> scan(std::string_view code, LanguageLabel language);

// 1.0 incomplete, 0.5 uncertain, 0.0 complete.
double completeness_score(std::string_view code, LanguageLabel language);

// Decision keywords plus logical operators, counted over code spans only.
int decision_point_count(const std::vector<LexSpan>& spans, LanguageLabel language);

struct FunctionGroup {
    int start_line = 1;  // signature (or def) line
    int end_line = 1;
    std::vector<LexSpan> spans;  // code/identifier spans clipped to the body
};

std::vector<FunctionGroup> extract_functions(std::string_view code, LanguageLabel language);

// Source text with comment/string/error content blanked out (newlines kept).
std::string masked_code_text(const std::vector<LexSpan>& spans);

int count_statements(const ScanResult& result, LanguageLabel language);

long count_lines(std::string_view text);

}  // namespace mgcd
