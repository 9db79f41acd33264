#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mgcd {

// Sparse feature vector, sorted by column index.
using SparseVec = std::vector<std::pair<std::uint32_t, double>>;

struct NgramConfig {
    int n_min = 3;
    int n_max = 8;
    std::size_t max_vocabulary = 200000;  // document-frequency-ranked cap
    bool preserve_case = true;
};

NgramConfig langid_ngram_preset();   // (3,8), vocab cap 200k
NgramConfig linecls_ngram_preset();  // (3,5), vocab cap 100k

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
        return std::hash<std::string_view>{}(s);
    }
};

// Fitted character n-gram TF-IDF state. Immutable after fit; transform is
// safe to call concurrently.
class NgramVectorizer {
public:
    NgramVectorizer() = default;

    const NgramConfig& config() const { return config_; }
    std::size_t vocabulary_size() const { return terms_.size(); }
    std::size_t n_documents() const { return n_documents_; }
    // Terms in column order (lexicographic).
    const std::vector<std::string>& terms() const { return terms_; }
    const std::vector<double>& idf() const { return idf_; }
    std::int64_t column_of(std::string_view term) const;

    // count(t) * idf[t] per vocabulary term, L2-normalized. All-zero stays all-zero.
    SparseVec transform(std::string_view document) const;

    static NgramVectorizer from_parts(NgramConfig config, std::vector<std::string> terms,
                                      std::vector<double> idf, std::size_t n_documents);

private:
    friend NgramVectorizer fit_vectorizer(const std::vector<std::string>&, const NgramConfig&);

    NgramConfig config_;
    std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> vocabulary_;
    std::vector<std::string> terms_;
    std::vector<double> idf_;
    std::size_t n_documents_ = 0;

    void rebuild_index();
};

// Vocabulary keeps the max_vocabulary most document-frequent n-grams, ties
// broken lexicographically; idf[t] = ln((1+N)/(1+df(t))) + 1.
NgramVectorizer fit_vectorizer(const std::vector<std::string>& documents,
                               const NgramConfig& config);

double l2_norm(const SparseVec& v);
double sparse_dot(const SparseVec& a, const std::vector<double>& dense);

}  // namespace mgcd
