#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgcd/corpus.hpp"
#include "mgcd/features.hpp"
#include "mgcd/langid.hpp"
#include "mgcd/linecls.hpp"
#include "mgcd/ml.hpp"

namespace mgcd {

struct HeuristicConfig {
    std::vector<std::string> language_marker_set = {
        "python", "py", "java", "cpp", "c++", "c", "csharp", "c#",
        "go", "golang", "php", "javascript", "js"};
    bool accept_fenced_markers = true;  // lines like ```python
    double text_like_threshold = 0.3;
    bool enabled = true;
};

enum class Reason { heuristic_markdown, heuristic_text_ratio, classifier };
std::string_view to_string(Reason reason);

enum class ClassifierKind { tree, logreg };
std::string_view to_string(ClassifierKind kind);

// Self-contained bundle: prediction needs nothing beyond this struct.
struct PipelineModel {
    int schema_version = 1;
    LangIdModel langid;
    LineClassifierModel linecls;
    VerbLexicon lexicon;
    BucketScaler scaler;
    ClassifierKind classifier_kind = ClassifierKind::tree;
    DecisionTreeModel tree;
    LogisticRegressionModel logreg;
    HeuristicConfig heuristics;
    std::vector<int> feature_columns;  // indices into the 9-feature vector
    std::uint64_t seed = 0;
};

// True iff the first nonblank line, trimmed and lowercased, is exactly a
// language marker or (optionally) a ``` fence with at most a marker after it.
bool markdown_leak_flag(std::string_view code, const HeuristicConfig& config);

bool text_ratio_flag(const SnippetFeatures& features, const HeuristicConfig& config);

struct Decision {
    int label = 0;
    double score = 0.0;  // in [0,1]
    Reason reason = Reason::classifier;
};

// Heuristics fire first and only ever force label 1; otherwise the main
// classifier decides on bucket-scaled features.
Decision decide(const CodeSample& sample, const PipelineModel& pipeline);
Decision decide_with_features(const CodeSample& sample, const SnippetFeatures& features,
                              const PipelineModel& pipeline);

struct TrainConfig {
    ClassifierKind classifier = ClassifierKind::tree;
    std::optional<double> decision_threshold;  // unset = tune on validation (logreg only)
    bool heuristics = true;
    std::vector<int> feature_columns = {0, 1};  // comment_ratio, verb_comment_ratio
    double l2_lambda = 1.0;
    double linecls_l2_lambda = 0.01;
    std::uint64_t seed = 0;
};

PipelineModel train_pipeline(const std::vector<CodeSample>& train,
                             const std::vector<CodeSample>& validation,
                             const std::vector<std::pair<std::string, LanguageLabel>>& langid_data,
                             const std::vector<std::pair<std::string, int>>& line_data,
                             const TrainConfig& config);

struct Prediction {
    std::string id;
    int label = 0;
    double score = 0.0;
    Reason reason = Reason::classifier;
};

// Order-preserving; samples are evaluated independently (optionally across
// n_threads workers) and merged deterministically.
std::vector<Prediction> predict_batch(const std::vector<CodeSample>& samples,
                                      const PipelineModel& pipeline, int n_threads = 1);

}  // namespace mgcd
