#include "mgcd/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "mgcd/verb_words.hpp"

namespace mgcd {

const std::array<std::string, kNumFeatures>& feature_names() {
    static const std::array<std::string, kNumFeatures> names = {
        "comment_ratio",        "verb_comment_ratio",   "text_like_ratio",
        "identifier_verb_ratio", "comment_code_like_ratio", "completeness_score",
        "errors_near_eof_ratio", "cyclomatic_complexity_mean", "statements_to_loc"};
    return names;
}

std::array<double, kNumFeatures> SnippetFeatures::as_array() const {
    return {comment_ratio,        verb_comment_ratio,        text_like_ratio,
            identifier_verb_ratio, comment_code_like_ratio,  completeness_score,
            errors_near_eof_ratio, cyclomatic_complexity_mean, statements_to_loc};
}

VerbLexicon::VerbLexicon(std::unordered_set<std::string> verbs,
                         std::vector<std::string> suffix_rules, std::string version)
    : verbs_(std::move(verbs)), suffix_rules_(std::move(suffix_rules)),
      version_(std::move(version)) {}

const VerbLexicon& VerbLexicon::builtin() {
    static const VerbLexicon lexicon = [] {
        std::unordered_set<std::string> verbs;
        for (const char* word : kVerbWords) verbs.insert(word);
        return VerbLexicon(std::move(verbs), {"ize", "ise", "ify", "ate"},
                           kVerbLexiconVersion);
    }();
    return lexicon;
}

bool VerbLexicon::is_verb(std::string_view word) const {
    std::string lower(word);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (verbs_.count(lower)) return true;
    // Common inflections fall back to the base form.
    auto in_set = [&](const std::string& w) { return verbs_.count(w) > 0; };
    const std::size_t n = lower.size();
    if (n > 3 && lower.ends_with("ies") && in_set(lower.substr(0, n - 3) + "y")) return true;
    if (n > 2 && lower.ends_with("es") && in_set(lower.substr(0, n - 2))) return true;
    if (n > 1 && lower.ends_with("s") && in_set(lower.substr(0, n - 1))) return true;
    if (n > 2 && lower.ends_with("ed") &&
        (in_set(lower.substr(0, n - 2)) || in_set(lower.substr(0, n - 1))))
        return true;
    if (n > 3 && lower.ends_with("ing") &&
        (in_set(lower.substr(0, n - 3)) || in_set(lower.substr(0, n - 3) + "e")))
        return true;
    for (const auto& suffix : suffix_rules_)
        if (n > suffix.size() + 1 && lower.ends_with(suffix)) return true;
    return false;
}

namespace {

std::vector<std::string_view> text_lines(std::string_view text) {
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

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

template <typename Fn>
void for_each_alpha_token(std::string_view text, Fn&& fn) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            fn(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
}

}  // namespace

double comment_ratio(const std::vector<LexSpan>& spans, long total_lines) {
    if (total_lines <= 0) return 0.0;
    std::set<int> comment_lines;
    for (const auto& span : spans) {
        if (span.kind != SpanKind::comment) continue;
        for (int line = span.start_line; line <= span.end_line; ++line)
            comment_lines.insert(line);
    }
    return static_cast<double>(comment_lines.size()) / static_cast<double>(total_lines);
}

double verb_comment_ratio(const std::vector<LexSpan>& spans, const VerbLexicon& lexicon) {
    long words = 0;
    long verbs = 0;
    for (const auto& span : spans) {
        if (span.kind != SpanKind::comment) continue;
        for_each_alpha_token(span.text, [&](std::string_view token) {
            ++words;
            if (lexicon.is_verb(token)) ++verbs;
        });
    }
    return words > 0 ? static_cast<double>(verbs) / static_cast<double>(words) : 0.0;
}

double text_like_ratio(std::string_view snippet, const LineClassifierModel& model) {
    const auto classified = classify_lines(model, snippet);
    if (classified.empty()) return 0.0;
    long text = 0;
    for (const auto& line : classified) text += line.label;
    return static_cast<double>(text) / static_cast<double>(classified.size());
}

std::vector<std::string> split_identifier(std::string_view identifier) {
    std::vector<std::string> units;
    std::string current;
    auto push = [&] {
        if (!current.empty()) {
            units.push_back(current);
            current.clear();
        }
    };
    for (std::size_t i = 0; i < identifier.size(); ++i) {
        const char c = identifier[i];
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            push();  // underscores and digits separate units
            continue;
        }
        if (!current.empty() && std::isupper(static_cast<unsigned char>(c)) &&
            std::islower(static_cast<unsigned char>(identifier[i - 1])))
            push();
        current += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    push();
    return units;
}

double identifier_verb_ratio(const std::vector<LexSpan>& spans, const VerbLexicon& lexicon) {
    long units = 0;
    long verbs = 0;
    for (const auto& span : spans) {
        if (span.kind != SpanKind::identifier) continue;
        for (const auto& unit : split_identifier(span.text)) {
            ++units;
            if (lexicon.is_verb(unit)) ++verbs;
        }
    }
    return units > 0 ? static_cast<double>(verbs) / static_cast<double>(units) : 0.0;
}

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Comment-marker prefixes/suffixes removed before rule evaluation.
std::string_view strip_comment_decoration(std::string_view line) {
    line = trim_view(line);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::string_view marker : {"//", "/*", "#", "*", "--"}) {
            if (line.substr(0, marker.size()) == marker) {
                line = trim_view(line.substr(marker.size()));
                changed = true;
            }
        }
    }
    if (line.size() >= 2 && line.substr(line.size() - 2) == "*/")
        line = trim_view(line.substr(0, line.size() - 2));
    return line;
}

const std::unordered_set<std::string>& cross_language_keywords() {
    static const std::unordered_set<std::string> keywords = {
        "if",     "else",   "for",    "while",  "return", "def",    "class",
        "int",    "float",  "double", "void",   "char",   "bool",   "string",
        "var",    "let",    "const",  "func",   "function", "try",  "catch",
        "switch", "case",   "break",  "continue", "import", "from", "public",
        "private", "static", "new",   "print",  "echo",   "foreach", "elif",
        "struct", "long",   "byte",   "raise",  "throw",  "using",  "namespace"};
    return keywords;
}

bool is_code_like_comment_line(std::string_view line) {
    const std::string_view body = strip_comment_decoration(line);
    if (body.empty()) return false;

    const char last = body.back();
    if (last == ';' || last == '{' || last == '}') return true;

    // Leading language keyword.
    std::size_t w = 0;
    while (w < body.size() &&
           (std::isalnum(static_cast<unsigned char>(body[w])) || body[w] == '_'))
        ++w;
    if (w > 0 && cross_language_keywords().count(std::string(body.substr(0, w)))) return true;

    auto is_word_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        const bool starts_word =
            (std::isalpha(static_cast<unsigned char>(body[i])) || body[i] == '_') &&
            (i == 0 || !is_word_char(body[i - 1]));
        if (!starts_word) continue;
        std::size_t j = i;
        while (j < body.size() && is_word_char(body[j])) ++j;
        std::size_t k = j;
        while (k < body.size() && body[k] == ' ') ++k;
        // identifier = expr (not ==)
        if (k < body.size() && body[k] == '=' &&
            (k + 1 >= body.size() || body[k + 1] != '=')) {
            std::size_t v = k + 1;
            while (v < body.size() && body[v] == ' ') ++v;
            if (v < body.size()) return true;
        }
        // identifier(...)
        if (j < body.size() && body[j] == '(' &&
            body.find(')', j) != std::string_view::npos)
            return true;
        i = j;
    }
    return false;
}

}  // namespace

double comment_code_like_ratio(const std::vector<LexSpan>& spans) {
    long comment_lines = 0;
    long code_like = 0;
    for (const auto& span : spans) {
        if (span.kind != SpanKind::comment) continue;
        for (std::string_view line : text_lines(span.text)) {
            if (trim_view(line).empty()) continue;
            ++comment_lines;
            if (is_code_like_comment_line(line)) ++code_like;
        }
    }
    return comment_lines > 0
               ? static_cast<double>(code_like) / static_cast<double>(comment_lines)
               : 0.0;
}

double errors_near_eof_ratio(const std::vector<LexSpan>& spans, long total_lines) {
    long errors = 0;
    long near_eof = 0;
    const long window_start =
        static_cast<long>(std::ceil(0.8 * static_cast<double>(total_lines)));
    for (const auto& span : spans) {
        if (span.kind != SpanKind::error) continue;
        ++errors;
        if (span.end_line > window_start) ++near_eof;
    }
    return errors > 0 ? static_cast<double>(near_eof) / static_cast<double>(errors) : 0.0;
}

double cyclomatic_complexity_mean(std::string_view code, LanguageLabel language) {
    const auto groups = extract_functions(code, language);
    if (!groups.empty()) {
        double total = 0.0;
        for (const auto& group : groups)
            total += 1.0 + static_cast<double>(decision_point_count(group.spans, language));
        return total / static_cast<double>(groups.size());
    }
    // No functions: the whole snippet is one body, provided it has any code.
    const ScanResult result = scan_full(code, language);
    const std::string masked = masked_code_text(result.spans);
    const bool has_code = std::any_of(masked.begin(), masked.end(), [](unsigned char c) {
        return !std::isspace(c);
    });
    if (!has_code) return 0.0;
    return 1.0 + static_cast<double>(decision_point_count(result.spans, language));
}

double statements_to_loc(const ScanResult& result, LanguageLabel language, long total_loc) {
    if (total_loc <= 0) return 0.0;
    return static_cast<double>(count_statements(result, language)) /
           static_cast<double>(total_loc);
}

long lines_of_code(const std::vector<LexSpan>& spans) {
    // Comment content is blanked; string/error content still counts as code.
    std::string content;
    for (const auto& span : spans) {
        if (span.kind == SpanKind::comment) {
            for (char c : span.text) content += (c == '\n') ? '\n' : ' ';
        } else {
            content += span.text;
        }
    }
    long loc = 0;
    for (std::string_view line : text_lines(content))
        if (!blank(line)) ++loc;
    return loc;
}

SnippetFeatures extract_features(const CodeSample& sample, const LangIdModel& langid,
                                 const LineClassifierModel& linecls,
                                 const VerbLexicon& lexicon) {
    LanguageLabel language = LanguageLabel::python;
    bool resolved = false;
    if (sample.language) {
        if (const auto parsed = parse_language(*sample.language)) {
            language = *parsed;
            resolved = true;
        }
    }
    if (!resolved)
        language = predict_language(langid.nb, langid.vectorizer, sample.code).label;

    const ScanResult result = scan_full(sample.code, language);
    const long total_lines = count_lines(sample.code);
    const long loc = lines_of_code(result.spans);

    SnippetFeatures features;
    features.comment_ratio = comment_ratio(result.spans, total_lines);
    features.verb_comment_ratio = verb_comment_ratio(result.spans, lexicon);
    features.text_like_ratio = text_like_ratio(sample.code, linecls);
    features.identifier_verb_ratio = identifier_verb_ratio(result.spans, lexicon);
    features.comment_code_like_ratio = comment_code_like_ratio(result.spans);
    features.completeness_score = completeness_score(sample.code, language);
    features.errors_near_eof_ratio = errors_near_eof_ratio(result.spans, total_lines);
    features.cyclomatic_complexity_mean = cyclomatic_complexity_mean(sample.code, language);
    features.statements_to_loc = statements_to_loc(result, language, loc);
    return features;
}

}  // namespace mgcd
