#include "mgcd/linecls.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mgcd {

namespace {

std::string strip(std::string_view line) {
    std::size_t begin = 0;
    std::size_t end = line.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
    return std::string(line.substr(begin, end - begin));
}

}  // namespace

LineClassifierModel fit_line_classifier(const std::vector<std::pair<std::string, int>>& lines,
                                        const LineClsOptions& options) {
    if (lines.empty())
        throw std::invalid_argument("fit_line_classifier: empty training set");

    std::vector<std::string> docs;
    std::vector<int> labels;
    docs.reserve(lines.size());
    for (const auto& [line, label] : lines) {
        if (label != 0 && label != 1)
            throw std::invalid_argument("fit_line_classifier: labels must be 0 or 1");
        docs.push_back(strip(line));
        labels.push_back(label);
    }

    NgramConfig config = linecls_ngram_preset();
    config.max_vocabulary = options.max_vocabulary;

    LineClassifierModel model;
    model.vectorizer = fit_vectorizer(docs, config);

    std::vector<SparseVec> X;
    X.reserve(docs.size());
    for (const auto& doc : docs) X.push_back(model.vectorizer.transform(doc));

    LogregOptions opts;
    opts.l2_lambda = options.l2_lambda;
    opts.max_iterations = options.max_iterations;
    const LogisticRegressionModel fitted =
        fit_logreg_sparse(X, model.vectorizer.vocabulary_size(), labels, opts);
    model.weights = fitted.weights;
    model.bias = fitted.bias;
    model.l2_lambda = fitted.l2_lambda;
    model.converged = fitted.converged;
    model.iterations = fitted.iterations;
    return model;
}

double line_score(const LineClassifierModel& model, std::string_view line) {
    const SparseVec x = model.vectorizer.transform(strip(line));
    return model.bias + sparse_dot(x, model.weights);
}

std::vector<ClassifiedLine> classify_lines(const LineClassifierModel& model,
                                           std::string_view snippet) {
    std::vector<ClassifiedLine> out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= snippet.size()) {
        const std::size_t nl = snippet.find('\n', start);
        const std::string_view raw =
            snippet.substr(start, nl == std::string_view::npos ? snippet.size() - start
                                                               : nl - start);
        ++line_no;
        const std::string stripped = strip(raw);
        if (!stripped.empty())
            out.push_back(ClassifiedLine{line_no, std::string(raw),
                                         line_score(model, stripped) > 0.0 ? 1 : 0});
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return out;
}

}  // namespace mgcd
