#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mgcd/ngram.hpp"

namespace mgcd {

struct LogisticRegressionModel {
    std::vector<double> weights;
    double bias = 0.0;
    double l2_lambda = 1.0;
    double decision_threshold = 0.5;  // label 1 iff probability >= threshold
    bool converged = false;
    int iterations = 0;
    double final_loss = 0.0;
};

struct LogregOptions {
    double l2_lambda = 1.0;
    int max_iterations = 10000;
    double gradient_tolerance = 1e-6;  // inf-norm stopping rule
    // Called once per accepted step with (iteration, objective value).
    std::function<void(int, double)> observer;
};

// Mean logistic loss + (lambda/2)*||w||^2, bias unregularized.
double logreg_objective(const std::vector<SparseVec>& X, const std::vector<int>& y,
                        const std::vector<double>& weights, double bias, double l2_lambda);

// Analytic gradient of logreg_objective; returns (d_weights, d_bias).
std::pair<std::vector<double>, double>
logreg_gradient(const std::vector<SparseVec>& X, const std::vector<int>& y,
                std::size_t n_features, const std::vector<double>& weights,
                double bias, double l2_lambda);

// Full-batch gradient descent with backtracking line search.
LogisticRegressionModel fit_logreg_sparse(const std::vector<SparseVec>& X,
                                          std::size_t n_features,
                                          const std::vector<int>& y,
                                          const LogregOptions& options = {});

LogisticRegressionModel fit_logreg(const std::vector<std::vector<double>>& X,
                                   const std::vector<int>& y,
                                   const LogregOptions& options = {});

double sigmoid(double z);
double logreg_decision(const LogisticRegressionModel& model, const std::vector<double>& x);
double logreg_proba(const LogisticRegressionModel& model, const std::vector<double>& x);

struct TreeNode {
    int feature = -1;        // -1 marks a leaf
    double threshold = 0.0;  // x[feature] <= threshold goes left
    int left = -1;
    int right = -1;
    double p1 = 0.0;         // class-1 fraction of training samples at this node
    std::int64_t n_samples = 0;
};

struct DecisionTreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    int max_depth = 2;
};

// Exhaustive best-split search under the Gini criterion. Candidate thresholds
// are midpoints between consecutive sorted distinct values; ties broken by
// (lower feature index, lower threshold). Stops at max_depth, purity, or
// fewer than 2 samples.
DecisionTreeModel fit_tree(const std::vector<std::vector<double>>& X,
                           const std::vector<int>& y, int max_depth = 2);

double tree_proba(const DecisionTreeModel& model, const std::vector<double>& x);
int tree_predict(const DecisionTreeModel& model, const std::vector<double>& x);  // p1 > 0.5

// Per-bucket z-score parameters over line-count strata. Buckets partition the
// nonnegative integers: small <= boundaries[0] < medium <= boundaries[1] < large.
struct BucketScaler {
    std::array<long, 2> boundaries{0, 0};
    std::array<std::vector<double>, 3> mean;
    std::array<std::vector<double>, 3> stddev;
    std::vector<std::string> notes;  // bucket-merge events recorded at fit time

    int bucket_of(long line_count) const;
    std::vector<double> scale(long line_count, const std::vector<double>& x) const;
};

// Boundaries are tertiles of the training line counts. Zero-variance columns
// scale to 0; a bucket left empty by degenerate boundaries is merged with its
// neighbour and the event recorded in notes.
BucketScaler fit_bucket_scalers(const std::vector<long>& line_counts,
                                const std::vector<std::vector<double>>& X);

// Grid search over {0.01, ..., 0.99} maximizing macro-F1; smallest maximizer
// wins ties.
double tune_threshold(const LogisticRegressionModel& model,
                      const std::vector<std::vector<double>>& X_val,
                      const std::vector<int>& y_val);
double tune_threshold_on_probabilities(const std::vector<double>& probabilities,
                                       const std::vector<int>& y_val);

}  // namespace mgcd
