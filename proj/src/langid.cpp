#include "mgcd/langid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace mgcd {

namespace {

constexpr std::array<std::string_view, kNumLanguages> kNames = {
    "c", "cpp", "csharp", "go", "java", "javascript", "php", "python"};

}  // namespace

std::string_view to_string(LanguageLabel label) {
    return kNames[static_cast<std::size_t>(label)];
}

const std::vector<LanguageLabel>& all_languages() {
    static const std::vector<LanguageLabel> labels = {
        LanguageLabel::c,    LanguageLabel::cpp,        LanguageLabel::csharp,
        LanguageLabel::go,   LanguageLabel::java,       LanguageLabel::javascript,
        LanguageLabel::php,  LanguageLabel::python};
    return labels;
}

std::optional<LanguageLabel> parse_language(std::string_view tag) {
    std::string lower(tag);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    static const std::unordered_map<std::string, LanguageLabel> aliases = {
        {"c", LanguageLabel::c},
        {"cpp", LanguageLabel::cpp},
        {"c++", LanguageLabel::cpp},
        {"cxx", LanguageLabel::cpp},
        {"csharp", LanguageLabel::csharp},
        {"c#", LanguageLabel::csharp},
        {"cs", LanguageLabel::csharp},
        {"go", LanguageLabel::go},
        {"golang", LanguageLabel::go},
        {"java", LanguageLabel::java},
        {"javascript", LanguageLabel::javascript},
        {"js", LanguageLabel::javascript},
        {"php", LanguageLabel::php},
        {"python", LanguageLabel::python},
        {"py", LanguageLabel::python},
        {"python3", LanguageLabel::python},
    };
    const auto it = aliases.find(lower);
    if (it == aliases.end()) return std::nullopt;
    return it->second;
}

NaiveBayesModel fit_naive_bayes(const std::vector<SparseVec>& vectors,
                                const std::vector<LanguageLabel>& labels,
                                std::size_t n_columns, double alpha) {
    if (vectors.size() != labels.size() || vectors.empty())
        throw std::invalid_argument("fit_naive_bayes: bad training shapes");

    NaiveBayesModel model;
    model.alpha = alpha;
    model.classes = labels;
    std::sort(model.classes.begin(), model.classes.end());
    model.classes.erase(std::unique(model.classes.begin(), model.classes.end()),
                        model.classes.end());
    if (model.classes.size() < 2)
        throw std::invalid_argument("fit_naive_bayes: need at least two classes");

    std::unordered_map<int, std::size_t> class_index;
    for (std::size_t c = 0; c < model.classes.size(); ++c)
        class_index[static_cast<int>(model.classes[c])] = c;

    const std::size_t n_classes = model.classes.size();
    std::vector<double> class_count(n_classes, 0.0);
    std::vector<std::vector<double>> sums(n_classes, std::vector<double>(n_columns, 0.0));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const std::size_t c = class_index.at(static_cast<int>(labels[i]));
        class_count[c] += 1.0;
        for (const auto& [col, value] : vectors[i]) sums[c][col] += value;
    }

    model.class_log_prior.resize(n_classes);
    model.feature_log_prob.assign(n_classes, std::vector<double>(n_columns, 0.0));
    const double n_total = static_cast<double>(vectors.size());
    const double v_cols = static_cast<double>(n_columns);
    for (std::size_t c = 0; c < n_classes; ++c) {
        model.class_log_prior[c] = std::log(class_count[c] / n_total);
        double total = 0.0;
        for (double s : sums[c]) total += s;
        const double denom = std::log(total + alpha * v_cols);
        for (std::size_t j = 0; j < n_columns; ++j)
            model.feature_log_prob[c][j] = std::log(sums[c][j] + alpha) - denom;
    }
    return model;
}

LangIdModel fit_langid(const std::vector<std::pair<std::string, LanguageLabel>>& samples,
                       std::size_t max_vocabulary) {
    if (samples.empty()) throw std::invalid_argument("fit_langid: empty training set");

    std::vector<std::string> docs;
    std::vector<LanguageLabel> labels;
    docs.reserve(samples.size());
    labels.reserve(samples.size());
    for (const auto& [code, label] : samples) {
        docs.push_back(code);
        labels.push_back(label);
    }

    NgramConfig config = langid_ngram_preset();
    config.max_vocabulary = max_vocabulary;

    LangIdModel model;
    model.vectorizer = fit_vectorizer(docs, config);
    std::vector<SparseVec> vectors;
    vectors.reserve(docs.size());
    for (const auto& doc : docs) vectors.push_back(model.vectorizer.transform(doc));
    model.nb = fit_naive_bayes(vectors, labels, model.vectorizer.vocabulary_size());
    return model;
}

LanguagePrediction nb_predict(const NaiveBayesModel& model, const SparseVec& x) {
    if (model.classes.empty())
        throw std::invalid_argument("nb_predict: model is not fitted");
    LanguagePrediction out;
    out.scores.resize(model.classes.size());
    std::size_t best = 0;
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        double score = model.class_log_prior[c];
        const auto& row = model.feature_log_prob[c];
        for (const auto& [col, value] : x) score += value * row[col];
        out.scores[c] = score;
        if (score > out.scores[best]) best = c;  // ties keep the earlier class
    }
    out.label = model.classes[best];
    return out;
}

LanguagePrediction predict_language(const NaiveBayesModel& model,
                                    const NgramVectorizer& vectorizer,
                                    std::string_view code) {
    return nb_predict(model, vectorizer.transform(code));
}

}  // namespace mgcd
