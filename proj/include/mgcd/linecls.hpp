#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mgcd/ml.hpp"
#include "mgcd/ngram.hpp"

namespace mgcd {

// Binary code-vs-text line model: (3,5) char n-gram TF-IDF into a linear
// decision. text (label 1) iff bias + weights . transform(line) > 0.
struct LineClassifierModel {
    NgramVectorizer vectorizer;
    std::vector<double> weights;
    double bias = 0.0;
    double l2_lambda = 0.0;
    bool converged = false;
    int iterations = 0;
};

struct LineClsOptions {
    double l2_lambda = 0.01;
    int max_iterations = 10000;
    std::size_t max_vocabulary = 100000;
};

// labels: 1 = text, 0 = code. Lines are stripped of surrounding whitespace
// before vectorization.
LineClassifierModel fit_line_classifier(const std::vector<std::pair<std::string, int>>& lines,
                                        const LineClsOptions& options = {});

double line_score(const LineClassifierModel& model, std::string_view line);

struct ClassifiedLine {
    int line_no = 1;  // 1-based position in the snippet
    std::string line;
    int label = 0;  // 1 = text
};

// Splits on newline; blank/whitespace-only lines are excluded from the output.
std::vector<ClassifiedLine> classify_lines(const LineClassifierModel& model,
                                           std::string_view snippet);

}  // namespace mgcd
