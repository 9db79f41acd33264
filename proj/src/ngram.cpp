#include "mgcd/ngram.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace mgcd {

NgramConfig langid_ngram_preset() { return NgramConfig{3, 8, 200000, true}; }
NgramConfig linecls_ngram_preset() { return NgramConfig{3, 5, 100000, true}; }

namespace {

std::string fold_case(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

template <typename Fn>
void for_each_ngram(std::string_view doc, const NgramConfig& config, Fn&& fn) {
    for (int n = config.n_min; n <= config.n_max; ++n) {
        if (doc.size() < static_cast<std::size_t>(n)) break;
        const std::size_t count = doc.size() - static_cast<std::size_t>(n) + 1;
        for (std::size_t i = 0; i < count; ++i)
            fn(doc.substr(i, static_cast<std::size_t>(n)));
    }
}

}  // namespace

void NgramVectorizer::rebuild_index() {
    vocabulary_.clear();
    vocabulary_.reserve(terms_.size());
    for (std::uint32_t i = 0; i < terms_.size(); ++i) vocabulary_.emplace(terms_[i], i);
}

NgramVectorizer NgramVectorizer::from_parts(NgramConfig config, std::vector<std::string> terms,
                                            std::vector<double> idf, std::size_t n_documents) {
    if (terms.size() != idf.size())
        throw std::invalid_argument("vectorizer: terms/idf size mismatch");
    NgramVectorizer v;
    v.config_ = config;
    v.terms_ = std::move(terms);
    v.idf_ = std::move(idf);
    v.n_documents_ = n_documents;
    v.rebuild_index();
    return v;
}

std::int64_t NgramVectorizer::column_of(std::string_view term) const {
    const auto it = vocabulary_.find(term);
    return it == vocabulary_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

NgramVectorizer fit_vectorizer(const std::vector<std::string>& documents,
                               const NgramConfig& config) {
    if (documents.empty())
        throw std::invalid_argument("fit_vectorizer: at least one document required");
    if (config.n_min < 1 || config.n_max < config.n_min)
        throw std::invalid_argument("fit_vectorizer: invalid n-gram range");

    std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> df;
    for (const auto& raw : documents) {
        const std::string doc = config.preserve_case ? raw : fold_case(raw);
        std::unordered_set<std::string_view> seen;
        for_each_ngram(doc, config, [&](std::string_view gram) { seen.insert(gram); });
        for (std::string_view gram : seen) {
            auto it = df.find(gram);
            if (it == df.end())
                df.emplace(std::string(gram), 1);
            else
                ++it->second;
        }
    }

    std::vector<std::pair<std::string_view, std::size_t>> ranked;
    ranked.reserve(df.size());
    for (const auto& [term, count] : df) ranked.emplace_back(term, count);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > config.max_vocabulary) ranked.resize(config.max_vocabulary);

    // Column order is lexicographic over the retained vocabulary.
    std::vector<std::string> terms;
    terms.reserve(ranked.size());
    for (const auto& [term, count] : ranked) terms.emplace_back(term);
    std::sort(terms.begin(), terms.end());

    const double n_docs = static_cast<double>(documents.size());
    std::vector<double> idf(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const double d = static_cast<double>(df.find(std::string_view(terms[i]))->second);
        idf[i] = std::log((1.0 + n_docs) / (1.0 + d)) + 1.0;
    }

    return NgramVectorizer::from_parts(config, std::move(terms), std::move(idf),
                                       documents.size());
}

SparseVec NgramVectorizer::transform(std::string_view document) const {
    std::string folded;
    if (!config_.preserve_case) {
        folded = fold_case(document);
        document = folded;
    }
    std::vector<std::uint32_t> hits;
    for_each_ngram(document, config_, [&](std::string_view gram) {
        const auto it = vocabulary_.find(gram);
        if (it != vocabulary_.end()) hits.push_back(it->second);
    });
    if (hits.empty()) return {};
    std::sort(hits.begin(), hits.end());

    SparseVec vec;
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        while (j < hits.size() && hits[j] == hits[i]) ++j;
        vec.emplace_back(hits[i], static_cast<double>(j - i) * idf_[hits[i]]);
        i = j;
    }
    double norm = 0.0;
    for (const auto& [col, value] : vec) norm += value * value;
    norm = std::sqrt(norm);
    if (norm > 0.0)
        for (auto& [col, value] : vec) value /= norm;
    return vec;
}

double l2_norm(const SparseVec& v) {
    double s = 0.0;
    for (const auto& [col, value] : v) s += value * value;
    return std::sqrt(s);
}

double sparse_dot(const SparseVec& a, const std::vector<double>& dense) {
    double s = 0.0;
    for (const auto& [col, value] : a) s += value * dense[col];
    return s;
}

}  // namespace mgcd
