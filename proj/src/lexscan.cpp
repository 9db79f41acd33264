#include "mgcd/lexscan.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace mgcd {

std::string_view to_string(SpanKind kind) {
    switch (kind) {
        case SpanKind::comment: return "comment";
        case SpanKind::string: return "string";
        case SpanKind::identifier: return "identifier";
        case SpanKind::code: return "code";
        case SpanKind::error: return "error";
    }
    return "code";
}

long count_lines(std::string_view text) {
    if (text.empty()) return 0;
    long lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    if (text.back() != '\n') ++lines;
    return lines;
}

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::unordered_set<std::string> word_set(std::initializer_list<const char*> words) {
    std::unordered_set<std::string> out;
    for (const char* w : words) out.insert(w);
    return out;
}

StringDelimiter quote(const char* open, const char* close, bool multi_line,
                      bool backslash_escape, bool doubled_close = false) {
    return StringDelimiter{open, close, multi_line, backslash_escape, doubled_close};
}

const std::unordered_set<std::string> kCKeywords = word_set({
    "auto", "break", "case", "char", "const", "continue", "default", "do", "double",
    "else", "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long",
    "register", "restrict", "return", "short", "signed", "sizeof", "static", "struct",
    "switch", "typedef", "union", "unsigned", "void", "volatile", "while"});

std::unordered_set<std::string> cpp_keywords() {
    auto kw = kCKeywords;
    for (const char* w :
         {"alignas", "alignof", "and", "bool", "catch", "class", "compl", "concept",
          "consteval", "constexpr", "constinit", "const_cast", "co_await", "co_return",
          "co_yield", "decltype", "delete", "dynamic_cast", "explicit", "export", "false",
          "friend", "mutable", "namespace", "new", "noexcept", "not", "nullptr", "operator",
          "or", "private", "protected", "public", "reinterpret_cast", "requires",
          "static_assert", "static_cast", "template", "this", "thread_local", "throw",
          "true", "try", "typeid", "typename", "using", "virtual", "wchar_t", "xor",
          "char8_t", "char16_t", "char32_t"})
        kw.insert(w);
    return kw;
}

LanguageProfile make_profile(LanguageLabel lang) {
    LanguageProfile p;
    p.language = lang;
    switch (lang) {
        case LanguageLabel::c:
            p.line_comment_markers = {"//"};
            p.block_comment_pairs = {{"/*", "*/"}};
            p.string_delimiters = {quote("\"", "\"", false, true), quote("'", "'", false, true)};
            p.string_prefixes = {"l", "u", "u8"};
            p.keywords = kCKeywords;
            p.decision_keywords = word_set({"if", "for", "while", "do", "case"});
            p.logical_operators = {"&&", "||"};
            break;
        case LanguageLabel::cpp:
            p.line_comment_markers = {"//"};
            p.block_comment_pairs = {{"/*", "*/"}};
            p.string_delimiters = {quote("\"", "\"", false, true), quote("'", "'", false, true)};
            p.string_prefixes = {"l", "u", "u8", "r"};
            p.keywords = cpp_keywords();
            p.decision_keywords = word_set({"if", "for", "while", "do", "case", "catch"});
            p.logical_operators = {"&&", "||"};
            break;
        case LanguageLabel::csharp:
            p.line_comment_markers = {"//"};
            p.block_comment_pairs = {{"/*", "*/"}};
            p.string_delimiters = {quote("$@\"", "\"", true, false, true),
                                   quote("@$\"", "\"", true, false, true),
                                   quote("@\"", "\"", true, false, true),
                                   quote("$\"", "\"", false, true),
                                   quote("\"", "\"", false, true),
                                   quote("'", "'", false, true)};
            p.keywords = word_set(
                {"abstract", "as", "async", "await", "base", "bool", "break", "byte", "case",
                 "catch", "char", "checked", "class", "const", "continue", "decimal",
                 "default", "delegate", "do", "double", "else", "enum", "event", "explicit",
                 "extern", "false", "finally", "fixed", "float", "for", "foreach", "goto",
                 "if", "implicit", "in", "int", "interface", "internal", "is", "lock",
                 "long", "namespace", "new", "null", "object", "operator", "out", "override",
                 "params", "private", "protected", "public", "readonly", "ref", "return",
                 "sbyte", "sealed", "short", "sizeof", "stackalloc", "static", "string",
                 "struct", "switch", "this", "throw", "true", "try", "typeof", "uint",
                 "ulong", "unchecked", "unsafe", "ushort", "using", "var", "virtual",
                 "void", "volatile", "while"});
            p.decision_keywords =
                word_set({"if", "for", "foreach", "while", "do", "case", "catch"});
            p.logical_operators = {"&&", "||"};
            break;
        case LanguageLabel::go:
            p.line_comment_markers = {"//"};
            p.block_comment_pairs = {{"/*", "*/"}};
            p.string_delimiters = {quote("\"", "\"", false, true), quote("'", "'", false, true),
                                   quote("`", "`", true, false)};
            p.keywords = word_set({"break", "case", "chan", "const", "continue", "default",
                                   "defer", "else", "fallthrough", "for", "func", "go",
                                   "goto", "if", "import", "interface", "map", "package",
                                   "range", "return", "select", "struct", "switch", "type",
                                   "var", "true", "false", "nil", "iota"});
            p.decision_keywords = word_set({"if", "for", "case", "select"});
            p.logical_operators = {"&&", "||"};
            p.statement_rule = StatementRule::line_based;
            p.complete_line_suffixes = {"++", "--"};
            break;
        case LanguageLabel::java:
            p.line_comment_markers = {"//"};
            p.block_comment_pairs = {{"/*", "*/"}};
            p.string_delimiters = {quote("\"\"\"", "\"\"\"", true, true),
                                   quote("\"", "\"", false, true), quote("'", "'", false, true)};
            p.keywords = word_set(
                {"abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
                 "class", "const", "continue", "default", "do", "double", "else", "enum",
                 "extends", "final", "finally", "float", "for", "goto", "if", "implements",
                 "import", "instanceof", "int", "interface", "long", "native", "new",
                 "package", "private", "protected", "public", "return", "short", "static",
                 "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
                 "transient", "try", "void", "volatile", "while", "true", "false", "null",
                 "var"});
            p.decision_keywords = word_set({"if", "for", "while", "do", "case", "catch"});
            p.logical_operators = {"&&", "||"};
            break;
        case LanguageLabel::javascript:
            p.line_comment_markers = {"//"};
            p.block_comment_pairs = {{"/*", "*/"}};
            p.string_delimiters = {quote("\"", "\"", false, true), quote("'", "'", false, true),
                                   quote("`", "`", true, true)};
            p.keywords = word_set(
                {"break", "case", "catch", "class", "const", "continue", "debugger",
                 "default", "delete", "do", "else", "export", "extends", "finally", "for",
                 "function", "if", "import", "in", "instanceof", "let", "new", "of",
                 "return", "static", "super", "switch", "this", "throw", "try", "typeof",
                 "var", "void", "while", "with", "yield", "async", "await", "true", "false",
                 "null", "undefined"});
            p.decision_keywords = word_set({"if", "for", "while", "do", "case", "catch"});
            p.logical_operators = {"&&", "||"};
            break;
        case LanguageLabel::php:
            // Snippets usually arrive without the opening tag; the whole input
            // is scanned as PHP source either way.
            p.line_comment_markers = {"//", "#"};
            p.block_comment_pairs = {{"/*", "*/"}};
            p.string_delimiters = {quote("\"", "\"", false, true), quote("'", "'", false, true)};
            p.keywords = word_set(
                {"abstract", "and", "array", "as", "break", "callable", "case", "catch",
                 "class", "clone", "const", "continue", "declare", "default", "do", "echo",
                 "else", "elseif", "empty", "enddeclare", "endfor", "endforeach", "endif",
                 "endswitch", "endwhile", "extends", "final", "finally", "fn", "for",
                 "foreach", "function", "global", "goto", "if", "implements", "include",
                 "include_once", "instanceof", "insteadof", "interface", "isset", "list",
                 "match", "namespace", "new", "or", "print", "private", "protected",
                 "public", "readonly", "require", "require_once", "return", "static",
                 "switch", "throw", "trait", "try", "unset", "use", "var", "while", "xor",
                 "yield", "true", "false", "null"});
            p.decision_keywords = word_set(
                {"if", "for", "foreach", "while", "do", "case", "catch", "elseif", "and", "or"});
            p.logical_operators = {"&&", "||"};
            break;
        case LanguageLabel::python:
            p.line_comment_markers = {"#"};
            p.block_comment_pairs = {};
            p.string_delimiters = {quote("\"\"\"", "\"\"\"", true, true),
                                   quote("'''", "'''", true, true),
                                   quote("\"", "\"", false, true), quote("'", "'", false, true)};
            p.string_prefixes = {"r", "b", "u", "f", "rb", "br", "fr", "rf"};
            p.keywords = word_set({"False", "None", "True", "and", "as", "assert", "async",
                                   "await", "break", "class", "continue", "def", "del",
                                   "elif", "else", "except", "finally", "for", "from",
                                   "global", "if", "import", "in", "is", "lambda",
                                   "nonlocal", "not", "or", "pass", "raise", "return",
                                   "try", "while", "with", "yield"});
            p.decision_keywords =
                word_set({"if", "for", "while", "elif", "except", "and", "or"});
            p.logical_operators = {};
            p.statement_rule = StatementRule::line_based;
            p.block_style = BlockStyle::indentation;
            break;
    }
    // Longest delimiter first so """ wins over ".
    std::sort(p.string_delimiters.begin(), p.string_delimiters.end(),
              [](const StringDelimiter& a, const StringDelimiter& b) {
                  return a.open.size() > b.open.size();
              });
    return p;
}

}  // namespace

const LanguageProfile& profile_for(LanguageLabel language) {
    static const std::array<LanguageProfile, kNumLanguages> profiles = [] {
        std::array<LanguageProfile, kNumLanguages> out{};
        for (int i = 0; i < kNumLanguages; ++i)
            out[static_cast<std::size_t>(i)] = make_profile(static_cast<LanguageLabel>(i));
        return out;
    }();
    return profiles[static_cast<std::size_t>(language)];
}

namespace {

class Scanner {
public:
    Scanner(std::string_view input, const LanguageProfile& profile)
        : input_(input), profile_(profile) {}

    ScanResult run() {
        result_.line_bracket_depth.push_back(0);
        while (pos_ < input_.size()) {
            step();
        }
        flush_code(pos_);
        result_.open_brackets_at_eof = static_cast<int>(bracket_stack_.size());
        return std::move(result_);
    }

private:
    std::string_view input_;
    const LanguageProfile& profile_;
    ScanResult result_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::size_t code_start_ = 0;
    int code_start_line_ = 1;
    bool in_code_run_ = false;
    std::vector<char> bracket_stack_;
    int paren_depth_ = 0;  // ( and [ only, for line-continuation detection

    bool matches(std::size_t at, std::string_view token) const {
        return input_.compare(at, token.size(), token) == 0;
    }

    void advance() {
        if (input_[pos_] == '\n') {
            ++line_;
            result_.line_bracket_depth.push_back(paren_depth_);
        }
        ++pos_;
    }

    void advance_n(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) advance();
    }

    void emit(SpanKind kind, std::size_t start, std::size_t end, int start_line) {
        if (end <= start) return;
        std::string text(input_.substr(start, end - start));
        // A trailing newline belongs to the line it terminates.
        int end_line = start_line;
        for (char c : text) end_line += (c == '\n');
        if (text.back() == '\n') --end_line;
        result_.spans.push_back(LexSpan{kind, start_line, end_line, std::move(text)});
    }

    void open_code_run() {
        if (!in_code_run_) {
            code_start_ = pos_;
            code_start_line_ = line_;
            in_code_run_ = true;
        }
    }

    void flush_code(std::size_t end) {
        if (in_code_run_) {
            emit(SpanKind::code, code_start_, end, code_start_line_);
            in_code_run_ = false;
        }
    }

    void step() {
        const char c = input_[pos_];

        for (const auto& marker : profile_.line_comment_markers) {
            if (matches(pos_, marker)) {
                consume_line_comment();
                return;
            }
        }
        for (const auto& [open, close] : profile_.block_comment_pairs) {
            if (matches(pos_, open)) {
                consume_block_comment(open, close);
                return;
            }
        }
        for (const auto& delim : profile_.string_delimiters) {
            if (matches(pos_, delim.open)) {
                consume_string(delim, pos_, pos_);
                return;
            }
        }

        if (is_ident_start(c) && (pos_ == 0 || !is_ident_char(input_[pos_ - 1]))) {
            consume_word();
            return;
        }

        if (c == '(' || c == '[' || c == '{') {
            open_code_run();
            bracket_stack_.push_back(c);
            if (c != '{') ++paren_depth_;
            advance();
            return;
        }
        if (c == ')' || c == ']' || c == '}') {
            const char open = c == ')' ? '(' : (c == ']' ? '[' : '{');
            if (!bracket_stack_.empty() && bracket_stack_.back() == open) {
                bracket_stack_.pop_back();
                if (c != '}') --paren_depth_;
                open_code_run();
                advance();
            } else {
                flush_code(pos_);
                const std::size_t start = pos_;
                const int start_line = line_;
                advance();
                emit(SpanKind::error, start, pos_, start_line);
            }
            return;
        }

        open_code_run();
        advance();
    }

    void consume_line_comment() {
        flush_code(pos_);
        const std::size_t start = pos_;
        const int start_line = line_;
        while (pos_ < input_.size() && input_[pos_] != '\n') advance();
        emit(SpanKind::comment, start, pos_, start_line);
    }

    void consume_block_comment(const std::string& open, const std::string& close) {
        flush_code(pos_);
        const std::size_t start = pos_;
        const int start_line = line_;
        advance_n(open.size());
        while (pos_ < input_.size()) {
            if (matches(pos_, close)) {
                advance_n(close.size());
                emit(SpanKind::comment, start, pos_, start_line);
                return;
            }
            advance();
        }
        emit(SpanKind::error, start, pos_, start_line);
        result_.unterminated_at_eof = true;
    }

    void consume_string(const StringDelimiter& delim, std::size_t span_start,
                        std::size_t quote_pos) {
        flush_code(span_start);
        const int start_line = line_;
        advance_n(quote_pos - pos_ + delim.open.size());
        while (pos_ < input_.size()) {
            if (delim.backslash_escape && input_[pos_] == '\\' && pos_ + 1 < input_.size()) {
                advance_n(2);
                continue;
            }
            if (matches(pos_, delim.close)) {
                if (delim.doubled_close_escape && matches(pos_ + delim.close.size(), delim.close)) {
                    advance_n(2 * delim.close.size());
                    continue;
                }
                advance_n(delim.close.size());
                emit(SpanKind::string, span_start, pos_, start_line);
                return;
            }
            if (!delim.multi_line && input_[pos_] == '\n') {
                // Unterminated single-line string; the newline stays outside.
                emit(SpanKind::error, span_start, pos_, start_line);
                return;
            }
            advance();
        }
        emit(SpanKind::error, span_start, pos_, start_line);
        result_.unterminated_at_eof = true;
    }

    void consume_word() {
        const std::size_t start = pos_;
        std::size_t end = pos_;
        while (end < input_.size() && is_ident_char(input_[end])) ++end;
        std::string word(input_.substr(start, end - start));

        if (!profile_.string_prefixes.empty() && end < input_.size()) {
            std::string lower = word;
            std::transform(lower.begin(), lower.end(), lower.begin(),
                           [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
            const bool is_prefix =
                std::find(profile_.string_prefixes.begin(), profile_.string_prefixes.end(),
                          lower) != profile_.string_prefixes.end();
            if (is_prefix) {
                for (const auto& delim : profile_.string_delimiters) {
                    if (matches(end, delim.open)) {
                        consume_string(delim, start, end);
                        return;
                    }
                }
            }
        }

        if (profile_.keywords.count(word)) {
            open_code_run();
            advance_n(end - start);
            return;
        }
        flush_code(pos_);
        const int start_line = line_;
        advance_n(end - start);
        emit(SpanKind::identifier, start, end, start_line);
    }
};

}  // namespace

ScanResult scan_full(std::string_view code, LanguageLabel language) {
    Scanner scanner(code, profile_for(language));
    return scanner.run();
}

std::vector<LexSpan> scan(std::string_view code, LanguageLabel language) {
    return scan_full(code, language).spans;
}

std::string masked_code_text(const std::vector<LexSpan>& spans) {
    std::string out;
    for (const auto& span : spans) {
        if (span.kind == SpanKind::code || span.kind == SpanKind::identifier) {
            out += span.text;
        } else {
            for (char c : span.text) out += (c == '\n') ? '\n' : ' ';
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (start < text.size()) lines.push_back(text.substr(start));
    return lines;
}

std::string_view rtrim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string_view ltrim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    return s;
}

template <typename Fn>
void for_each_word(std::string_view text, Fn&& fn) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_ident_start(text[i]) && (i == 0 || !is_ident_char(text[i - 1]))) {
            std::size_t j = i;
            while (j < text.size() && is_ident_char(text[j])) ++j;
            fn(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
}

int count_occurrences(std::string_view text, std::string_view needle) {
    if (needle.empty()) return 0;
    int count = 0;
    std::size_t at = 0;
    while ((at = text.find(needle, at)) != std::string_view::npos) {
        ++count;
        at += needle.size();
    }
    return count;
}

}  // namespace

int decision_point_count(const std::vector<LexSpan>& spans, LanguageLabel language) {
    const LanguageProfile& profile = profile_for(language);
    int count = 0;
    for (const auto& span : spans) {
        if (span.kind != SpanKind::code) continue;
        for_each_word(span.text, [&](std::string_view word) {
            if (profile.decision_keywords.count(std::string(word))) ++count;
        });
        for (const auto& op : profile.logical_operators)
            count += count_occurrences(span.text, op);
    }
    return count;
}

int count_statements(const ScanResult& result, LanguageLabel language) {
    const LanguageProfile& profile = profile_for(language);
    if (profile.statement_rule == StatementRule::semicolon) {
        int count = 0;
        for (const auto& span : result.spans)
            if (span.kind == SpanKind::code)
                count += count_occurrences(span.text, ";");
        return count;
    }

    // Line rule: nonblank code lines starting at bracket depth 0 whose
    // previous code line does not end in a backslash, skipping pure
    // delimiter/punctuation lines.
    const std::string masked = masked_code_text(result.spans);
    const auto lines = split_lines(masked);
    int count = 0;
    bool prev_continues = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto content = rtrim(ltrim(lines[i]));
        if (content.empty()) continue;
        const bool continued = prev_continues ||
                               (i < result.line_bracket_depth.size() &&
                                result.line_bracket_depth[i] > 0);
        prev_continues = !content.empty() && content.back() == '\\';
        if (continued) continue;
        const bool only_punct = std::all_of(content.begin(), content.end(), [](char c) {
            return std::string_view("()[]{};,:").find(c) != std::string_view::npos;
        });
        if (!only_punct) ++count;
    }
    return count;
}

double completeness_score(std::string_view code, LanguageLabel language) {
    const LanguageProfile& profile = profile_for(language);
    const ScanResult result = scan_full(code, language);

    if (result.open_brackets_at_eof > 0 || result.unterminated_at_eof) return 1.0;

    const std::string masked = masked_code_text(result.spans);
    std::string_view final_line;
    for (std::string_view line : split_lines(masked)) {
        if (!rtrim(line).empty()) final_line = rtrim(line);
    }

    if (!final_line.empty()) {
        bool ends_complete = false;
        for (const auto& suffix : profile.complete_line_suffixes)
            if (final_line.size() >= suffix.size() && final_line.ends_with(suffix))
                ends_complete = true;
        if (!ends_complete) {
            static constexpr std::array<std::string_view, 19> kTwoCharOps = {
                "&&", "||", "->", "=>", "<<", ">>", "==", "!=", "<=", ">=",
                "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "**"};
            bool incomplete = false;
            for (std::string_view op : kTwoCharOps)
                if (final_line.ends_with(op)) incomplete = true;
            const char last = final_line.back();
            if (std::string_view("+-*/%=<>&|^~?.,\\([{").find(last) != std::string_view::npos)
                incomplete = true;
            if (incomplete) return 1.0;
        }
    }

    if (profile.block_style == BlockStyle::indentation && !final_line.empty() &&
        final_line.back() == ':')
        return 0.5;
    if (count_statements(result, language) == 0) return 0.5;
    return 0.0;
}

namespace {

// Clip a span's text to the 1-based line range [first, last].
bool clip_span(const LexSpan& span, int first, int last, LexSpan& out) {
    if (span.end_line < first || span.start_line > last) return false;
    if (span.start_line >= first && span.end_line <= last) {
        out = span;
        return true;
    }
    std::vector<std::string_view> parts = split_lines(span.text);
    // A span ending in '\n' contributes that newline to its last line.
    std::string text;
    int line = span.start_line;
    std::size_t consumed = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::size_t part_end = consumed + parts[i].size();
        const bool has_newline = part_end < span.text.size();
        if (line >= first && line <= last) {
            text.append(parts[i]);
            if (has_newline && line < last) text += '\n';
        }
        consumed = part_end + (has_newline ? 1 : 0);
        ++line;
    }
    if (text.empty()) return false;
    out.kind = span.kind;
    out.start_line = std::max(span.start_line, first);
    out.end_line = std::min(span.end_line, last);
    out.text = std::move(text);
    return true;
}

std::vector<LexSpan> spans_in_range(const std::vector<LexSpan>& spans, int first, int last) {
    std::vector<LexSpan> out;
    for (const auto& span : spans) {
        if (span.kind != SpanKind::code && span.kind != SpanKind::identifier) continue;
        LexSpan clipped;
        if (clip_span(span, first, last, clipped)) out.push_back(std::move(clipped));
    }
    return out;
}

std::size_t indent_width(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i;
}

bool word_at(std::string_view line, std::size_t at, std::string_view word) {
    if (line.compare(at, word.size(), word) != 0) return false;
    const std::size_t end = at + word.size();
    return end >= line.size() || !is_ident_char(line[end]);
}

const std::unordered_set<std::string> kControlWords = {
    "if", "for", "while", "switch", "catch", "return", "sizeof", "do", "else",
    "foreach", "select", "elseif", "until", "match", "case", "new", "throw",
    "delete", "typeof", "instanceof", "await", "yield", "in"};

// A signature-like masked line: an identifier directly before '(' whose
// matching ')' is followed only by a trailer and then '{' (here or on a
// following line). Calls are rejected by the trailing ';'.
struct SignatureMatch {
    bool found = false;
    std::size_t open_brace_offset = std::string::npos;  // npos: '{' expected below
};

// Modifier words, type punctuation, and balanced parens (go multi-returns,
// c++ initializer lists) may sit between ')' and '{'.
bool trailer_is_clean(std::string_view trailer) {
    for (char c : trailer) {
        if (!is_ident_char(c) &&
            std::string_view(" \t:*&<>,.[]()").find(c) == std::string_view::npos)
            return false;
    }
    return true;
}

SignatureMatch match_signature(std::string_view line) {
    SignatureMatch result;
    const std::string_view trimmed = rtrim(line);
    if (trimmed.empty()) return result;

    // Lines led by a control keyword are never signatures.
    const std::string_view lead = ltrim(trimmed);
    std::size_t lead_end = 0;
    while (lead_end < lead.size() && is_ident_char(lead[lead_end])) ++lead_end;
    if (lead_end > 0 && kControlWords.count(std::string(lead.substr(0, lead_end)))) return result;

    for (std::size_t i = 0; i < trimmed.size(); ++i) {
        if (trimmed[i] != '(') continue;
        // Identifier immediately before the paren.
        std::size_t w = i;
        while (w > 0 && trimmed[w - 1] == ' ') --w;
        std::size_t ws = w;
        while (ws > 0 && is_ident_char(trimmed[ws - 1])) --ws;
        if (ws == w) continue;
        const std::string name(trimmed.substr(ws, w - ws));
        if (!is_ident_start(name[0])) continue;
        if (kControlWords.count(name)) continue;
        // Reject `new Foo() {` anonymous-class bodies.
        std::size_t prev_end = ws;
        while (prev_end > 0 && trimmed[prev_end - 1] == ' ') --prev_end;
        std::size_t prev_start = prev_end;
        while (prev_start > 0 && is_ident_char(trimmed[prev_start - 1])) --prev_start;
        if (prev_start < prev_end &&
            trimmed.substr(prev_start, prev_end - prev_start) == "new")
            continue;

        // Find the matching close paren on this line.
        int depth = 0;
        std::size_t close = std::string_view::npos;
        for (std::size_t j = i; j < trimmed.size(); ++j) {
            if (trimmed[j] == '(') ++depth;
            if (trimmed[j] == ')' && --depth == 0) {
                close = j;
                break;
            }
        }
        if (close == std::string_view::npos) continue;

        // Between ')' and '{' (or end of line) only modifier words and type
        // punctuation may appear; a ';' or further code rejects the match.
        std::string_view trailer = trimmed.substr(close + 1);
        const std::size_t brace = trailer.find('{');
        if (brace != std::string_view::npos) {
            if (!trailer_is_clean(trailer.substr(0, brace))) continue;
            result.found = true;
            result.open_brace_offset = close + 1 + brace;
            return result;
        }
        if (trailer_is_clean(trailer)) {
            result.found = true;
            return result;
        }
    }
    return result;
}

std::vector<FunctionGroup> extract_brace_functions(const std::vector<std::string_view>& lines,
                                                   const std::vector<LexSpan>& spans) {
    std::vector<FunctionGroup> groups;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const SignatureMatch sig = match_signature(lines[i]);
        if (!sig.found) continue;

        std::size_t brace_line = i;
        std::size_t brace_offset = sig.open_brace_offset;
        if (brace_offset == std::string::npos) {
            // '{' must open on a following nonblank line.
            bool found = false;
            for (std::size_t j = i + 1; j < lines.size() && j <= i + 2; ++j) {
                const auto content = ltrim(lines[j]);
                if (content.empty()) continue;
                if (content.front() == '{') {
                    brace_line = j;
                    brace_offset = lines[j].size() - content.size();
                    found = true;
                }
                break;
            }
            if (!found) continue;
        }

        int depth = 0;
        std::size_t end_line = lines.size() - 1;
        bool closed = false;
        for (std::size_t j = brace_line; j < lines.size() && !closed; ++j) {
            const std::string_view text = lines[j];
            for (std::size_t k = (j == brace_line ? brace_offset : 0); k < text.size(); ++k) {
                if (text[k] == '{') ++depth;
                if (text[k] == '}' && --depth == 0) {
                    end_line = j;
                    closed = true;
                    break;
                }
            }
        }

        FunctionGroup group;
        group.start_line = static_cast<int>(i) + 1;
        group.end_line = static_cast<int>(end_line) + 1;
        group.spans = spans_in_range(spans, group.start_line, group.end_line);
        groups.push_back(std::move(group));
    }
    return groups;
}

std::vector<FunctionGroup> extract_indent_functions(const std::vector<std::string_view>& lines,
                                                    const std::vector<LexSpan>& spans) {
    std::vector<FunctionGroup> groups;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        const std::size_t indent = indent_width(line);
        std::size_t at = indent;
        if (word_at(line, at, "async")) {
            at += 5;
            while (at < line.size() && line[at] == ' ') ++at;
        }
        if (!word_at(line, at, "def")) continue;
        if (line.find('(') == std::string_view::npos) continue;

        std::size_t end = i;
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto content = rtrim(ltrim(lines[j]));
            if (content.empty()) continue;
            if (indent_width(lines[j]) <= indent) break;
            end = j;
        }
        FunctionGroup group;
        group.start_line = static_cast<int>(i) + 1;
        group.end_line = static_cast<int>(end) + 1;
        group.spans = spans_in_range(spans, group.start_line, group.end_line);
        groups.push_back(std::move(group));
    }
    return groups;
}

}  // namespace

std::vector<FunctionGroup> extract_functions(std::string_view code, LanguageLabel language) {
    const LanguageProfile& profile = profile_for(language);
    const ScanResult result = scan_full(code, language);
    const std::string masked = masked_code_text(result.spans);
    const auto lines = split_lines(masked);
    if (lines.empty()) return {};
    if (profile.block_style == BlockStyle::indentation)
        return extract_indent_functions(lines, result.spans);
    return extract_brace_functions(lines, result.spans);
}

}  // namespace mgcd
