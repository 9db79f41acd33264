#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mgcd/corpus.hpp"
#include "mgcd/langid.hpp"
#include "mgcd/lexscan.hpp"
#include "mgcd/linecls.hpp"

namespace mgcd {

inline constexpr std::size_t kNumFeatures = 9;

// Column contract: downstream models address features by these indices.
const std::array<std::string, kNumFeatures>& feature_names();

struct SnippetFeatures {
    double comment_ratio = 0.0;
    double verb_comment_ratio = 0.0;
    double text_like_ratio = 0.0;
    double identifier_verb_ratio = 0.0;
    double comment_code_like_ratio = 0.0;
    double completeness_score = 0.0;
    double errors_near_eof_ratio = 0.0;
    double cyclomatic_complexity_mean = 0.0;
    double statements_to_loc = 0.0;

    std::array<double, kNumFeatures> as_array() const;
};

// Curated verb set with morphological fallbacks; lookup is case-insensitive.
class VerbLexicon {
public:
    VerbLexicon() = default;
    VerbLexicon(std::unordered_set<std::string> verbs, std::vector<std::string> suffix_rules,
                std::string version);

    static const VerbLexicon& builtin();

    bool is_verb(std::string_view word) const;
    const std::unordered_set<std::string>& verbs() const { return verbs_; }
    const std::vector<std::string>& suffix_rules() const { return suffix_rules_; }
    const std::string& version() const { return version_; }

private:
    std::unordered_set<std::string> verbs_;
    std::vector<std::string> suffix_rules_{"ize", "ise", "ify", "ate"};
    std::string version_ = "custom";
};

double comment_ratio(const std::vector<LexSpan>& spans, long total_lines);
double verb_comment_ratio(const std::vector<LexSpan>& spans, const VerbLexicon& lexicon);
double text_like_ratio(std::string_view snippet, const LineClassifierModel& model);
double identifier_verb_ratio(const std::vector<LexSpan>& spans, const VerbLexicon& lexicon);
double comment_code_like_ratio(const std::vector<LexSpan>& spans);
double errors_near_eof_ratio(const std::vector<LexSpan>& spans, long total_lines);
double cyclomatic_complexity_mean(std::string_view code, LanguageLabel language);
double statements_to_loc(const ScanResult& result, LanguageLabel language, long total_loc);

// Nonblank lines whose non-whitespace content is not entirely comment text.
long lines_of_code(const std::vector<LexSpan>& spans);

// Identifier decomposition: underscores, digit boundaries, and lower-to-upper
// camel transitions; units are lowercased alphabetic runs.
std::vector<std::string> split_identifier(std::string_view identifier);

// Uses the declared language when it parses, otherwise predicts one.
SnippetFeatures extract_features(const CodeSample& sample, const LangIdModel& langid,
                                 const LineClassifierModel& linecls,
                                 const VerbLexicon& lexicon);

}  // namespace mgcd
