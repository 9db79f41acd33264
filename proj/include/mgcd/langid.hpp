#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mgcd/ngram.hpp"

namespace mgcd {

// The eight task languages (three train + five unseen).
enum class LanguageLabel { c, cpp, csharp, go, java, javascript, php, python };

inline constexpr int kNumLanguages = 8;

std::string_view to_string(LanguageLabel label);
// Accepts canonical names plus common aliases (c++, c#, js, py, golang, ...).
std::optional<LanguageLabel> parse_language(std::string_view tag);
const std::vector<LanguageLabel>& all_languages();

struct NaiveBayesModel {
    double alpha = 0.1;
    std::vector<LanguageLabel> classes;             // ordered
    std::vector<double> class_log_prior;            // per class
    std::vector<std::vector<double>> feature_log_prob;  // [class][column]
};

struct LangIdModel {
    NgramVectorizer vectorizer;
    NaiveBayesModel nb;
};

// Multinomial NB over (3,8) char n-gram TF-IDF vectors; fractional feature
// values are accepted by the multinomial update.
LangIdModel fit_langid(const std::vector<std::pair<std::string, LanguageLabel>>& samples,
                       std::size_t max_vocabulary = 200000);

NaiveBayesModel fit_naive_bayes(const std::vector<SparseVec>& vectors,
                                const std::vector<LanguageLabel>& labels,
                                std::size_t n_columns, double alpha = 0.1);

struct LanguagePrediction {
    LanguageLabel label;
    std::vector<double> scores;  // unnormalized log-posteriors, one per model class
};

LanguagePrediction predict_language(const NaiveBayesModel& model,
                                    const NgramVectorizer& vectorizer,
                                    std::string_view code);

LanguagePrediction nb_predict(const NaiveBayesModel& model, const SparseVec& x);

}  // namespace mgcd
