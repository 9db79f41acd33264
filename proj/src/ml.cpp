#include "mgcd/ml.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mgcd/corpus.hpp"

namespace mgcd {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

namespace {

void check_binary_labels(const std::vector<int>& y) {
    bool has0 = false, has1 = false;
    for (int v : y) {
        if (v == 0)
            has0 = true;
        else if (v == 1)
            has1 = true;
        else
            throw std::invalid_argument("labels must be 0 or 1");
    }
    if (!has0 || !has1) throw std::invalid_argument("both classes must be present");
}

double raw_score(const SparseVec& x, const std::vector<double>& w, double b) {
    double z = b;
    for (const auto& [col, value] : x) z += value * w[col];
    return z;
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
    if (z > 35.0) return z;
    if (z < -35.0) return 0.0;
    return std::log1p(std::exp(z));
}

}  // namespace

double logreg_objective(const std::vector<SparseVec>& X, const std::vector<int>& y,
                        const std::vector<double>& weights, double bias, double l2_lambda) {
    double loss = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const double z = raw_score(X[i], weights, bias);
        // max(z,0) - z*y + log(1+exp(-|z|))
        loss += std::max(z, 0.0) - z * static_cast<double>(y[i]) + softplus(-std::abs(z));
    }
    loss /= static_cast<double>(X.size());
    double reg = 0.0;
    for (double w : weights) reg += w * w;
    return loss + 0.5 * l2_lambda * reg;
}

std::pair<std::vector<double>, double>
logreg_gradient(const std::vector<SparseVec>& X, const std::vector<int>& y,
                std::size_t n_features, const std::vector<double>& weights,
                double bias, double l2_lambda) {
    std::vector<double> dw(n_features, 0.0);
    double db = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const double g = sigmoid(raw_score(X[i], weights, bias)) - static_cast<double>(y[i]);
        for (const auto& [col, value] : X[i]) dw[col] += g * value;
        db += g;
    }
    const double inv_n = 1.0 / static_cast<double>(X.size());
    for (std::size_t j = 0; j < n_features; ++j) dw[j] = dw[j] * inv_n + l2_lambda * weights[j];
    db *= inv_n;
    return {std::move(dw), db};
}

LogisticRegressionModel fit_logreg_sparse(const std::vector<SparseVec>& X,
                                          std::size_t n_features,
                                          const std::vector<int>& y,
                                          const LogregOptions& options) {
    if (X.empty() || X.size() != y.size())
        throw std::invalid_argument("fit_logreg: bad training shapes");
    check_binary_labels(y);
    for (const auto& row : X)
        for (const auto& [col, value] : row) {
            if (!std::isfinite(value))
                throw std::invalid_argument("fit_logreg: non-finite feature value");
            if (col >= n_features)
                throw std::invalid_argument("fit_logreg: column index out of range");
        }

    LogisticRegressionModel model;
    model.l2_lambda = options.l2_lambda;
    model.weights.assign(n_features, 0.0);
    model.bias = 0.0;

    double objective = logreg_objective(X, y, model.weights, model.bias, options.l2_lambda);
    double step = 1.0;
    constexpr double kArmijo = 1e-4;

    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        auto [dw, db] = logreg_gradient(X, y, n_features, model.weights, model.bias,
                                        options.l2_lambda);
        double inf_norm = std::abs(db);
        double grad_sq = db * db;
        for (double g : dw) {
            inf_norm = std::max(inf_norm, std::abs(g));
            grad_sq += g * g;
        }
        if (inf_norm < options.gradient_tolerance) {
            model.converged = true;
            break;
        }

        step = std::min(step * 2.0, 1e6);
        std::vector<double> trial_w(n_features);
        double trial_b = 0.0;
        double trial_obj = 0.0;
        bool accepted = false;
        while (step > 1e-18) {
            for (std::size_t j = 0; j < n_features; ++j)
                trial_w[j] = model.weights[j] - step * dw[j];
            trial_b = model.bias - step * db;
            trial_obj = logreg_objective(X, y, trial_w, trial_b, options.l2_lambda);
            if (trial_obj <= objective - kArmijo * step * grad_sq) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // step underflow; gradient norm check reports convergence state
        model.weights.swap(trial_w);
        model.bias = trial_b;
        objective = trial_obj;
        if (options.observer) options.observer(iter, objective);
    }
    model.iterations = iter;
    model.final_loss = objective;
    return model;
}

LogisticRegressionModel fit_logreg(const std::vector<std::vector<double>>& X,
                                   const std::vector<int>& y, const LogregOptions& options) {
    if (X.empty()) throw std::invalid_argument("fit_logreg: empty training set");
    const std::size_t n_features = X[0].size();
    std::vector<SparseVec> sparse;
    sparse.reserve(X.size());
    for (const auto& row : X) {
        if (row.size() != n_features)
            throw std::invalid_argument("fit_logreg: ragged feature matrix");
        SparseVec v;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!std::isfinite(row[j]))
                throw std::invalid_argument("fit_logreg: non-finite feature value");
            if (row[j] != 0.0) v.emplace_back(static_cast<std::uint32_t>(j), row[j]);
        }
        sparse.push_back(std::move(v));
    }
    return fit_logreg_sparse(sparse, n_features, y, options);
}

double logreg_decision(const LogisticRegressionModel& model, const std::vector<double>& x) {
    double z = model.bias;
    for (std::size_t j = 0; j < x.size() && j < model.weights.size(); ++j)
        z += model.weights[j] * x[j];
    return z;
}

double logreg_proba(const LogisticRegressionModel& model, const std::vector<double>& x) {
    return sigmoid(logreg_decision(model, x));
}

// ---------------------------------------------------------------------------
// Depth-limited Gini tree
// ---------------------------------------------------------------------------

namespace {

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    // Weighted child Gini as an exact rational: num / (nl * nr). Ties compare
    // exactly, so the (feature, threshold) tie-break is FP-noise free.
    __int128 impurity_num = 0;
    std::int64_t impurity_den = 1;
};

// num = (nl^2 - a0^2 - a1^2) * nr + (nr^2 - b0^2 - b1^2) * nl, den = nl * nr.
void split_impurity(std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1,
                    __int128& num, std::int64_t& den) {
    const std::int64_t nl = a0 + a1;
    const std::int64_t nr = b0 + b1;
    num = static_cast<__int128>(nl * nl - a0 * a0 - a1 * a1) * nr +
          static_cast<__int128>(nr * nr - b0 * b0 - b1 * b1) * nl;
    den = nl * nr;
}

bool impurity_less(__int128 num_a, std::int64_t den_a, __int128 num_b, std::int64_t den_b) {
    return num_a * den_b < num_b * den_a;
}

SplitChoice best_split(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                       const std::vector<std::size_t>& idx) {
    SplitChoice best;
    const std::size_t n_features = X[idx[0]].size();
    std::vector<std::pair<double, int>> column(idx.size());
    for (std::size_t f = 0; f < n_features; ++f) {
        for (std::size_t k = 0; k < idx.size(); ++k)
            column[k] = {X[idx[k]][f], y[idx[k]]};
        std::sort(column.begin(), column.end());

        std::int64_t total0 = 0, total1 = 0;
        for (const auto& [value, label] : column) (label == 0 ? total0 : total1)++;
        std::int64_t left0 = 0, left1 = 0;
        for (std::size_t k = 0; k + 1 < column.size(); ++k) {
            (column[k].second == 0 ? left0 : left1)++;
            if (column[k].first == column[k + 1].first) continue;
            const double threshold = 0.5 * (column[k].first + column[k + 1].first);
            __int128 num;
            std::int64_t den;
            split_impurity(left0, left1, total0 - left0, total1 - left1, num, den);
            // Ascending (feature, threshold) iteration: strict improvement keeps
            // the lowest feature index and lowest threshold on ties.
            if (!best.found || impurity_less(num, den, best.impurity_num, best.impurity_den)) {
                best.found = true;
                best.feature = static_cast<int>(f);
                best.threshold = threshold;
                best.impurity_num = num;
                best.impurity_den = den;
            }
        }
    }
    return best;
}

int build_node(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
               const std::vector<std::size_t>& idx, int depth, int max_depth,
               std::vector<TreeNode>& nodes) {
    TreeNode node;
    node.n_samples = static_cast<std::int64_t>(idx.size());
    std::int64_t n1 = 0;
    for (std::size_t i : idx) n1 += y[i];
    node.p1 = static_cast<double>(n1) / static_cast<double>(idx.size());

    const bool pure = (n1 == 0 || n1 == node.n_samples);
    const int node_index = static_cast<int>(nodes.size());
    nodes.push_back(node);
    if (depth >= max_depth || pure || idx.size() < 2) return node_index;

    const SplitChoice choice = best_split(X, y, idx);
    if (!choice.found) return node_index;

    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : idx)
        (X[i][choice.feature] <= choice.threshold ? left_idx : right_idx).push_back(i);

    nodes[node_index].feature = choice.feature;
    nodes[node_index].threshold = choice.threshold;
    const int left = build_node(X, y, left_idx, depth + 1, max_depth, nodes);
    nodes[node_index].left = left;
    const int right = build_node(X, y, right_idx, depth + 1, max_depth, nodes);
    nodes[node_index].right = right;
    return node_index;
}

}  // namespace

DecisionTreeModel fit_tree(const std::vector<std::vector<double>>& X,
                           const std::vector<int>& y, int max_depth) {
    if (X.empty() || X.size() != y.size())
        throw std::invalid_argument("fit_tree: bad training shapes");
    check_binary_labels(y);

    DecisionTreeModel model;
    model.max_depth = max_depth;
    std::vector<std::size_t> idx(X.size());
    std::iota(idx.begin(), idx.end(), 0);
    build_node(X, y, idx, 0, max_depth, model.nodes);
    return model;
}

double tree_proba(const DecisionTreeModel& model, const std::vector<double>& x) {
    if (model.nodes.empty()) throw std::invalid_argument("tree_proba: empty model");
    int node = 0;
    while (model.nodes[node].feature >= 0) {
        const auto& n = model.nodes[node];
        node = x[n.feature] <= n.threshold ? n.left : n.right;
    }
    return model.nodes[node].p1;
}

int tree_predict(const DecisionTreeModel& model, const std::vector<double>& x) {
    return tree_proba(model, x) > 0.5 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Bucket scaling
// ---------------------------------------------------------------------------

int BucketScaler::bucket_of(long line_count) const {
    if (line_count <= boundaries[0]) return 0;
    if (line_count <= boundaries[1]) return 1;
    return 2;
}

std::vector<double> BucketScaler::scale(long line_count, const std::vector<double>& x) const {
    const int b = bucket_of(line_count);
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double sd = stddev[b][j];
        out[j] = sd > 0.0 ? (x[j] - mean[b][j]) / sd : 0.0;
    }
    return out;
}

BucketScaler fit_bucket_scalers(const std::vector<long>& line_counts,
                                const std::vector<std::vector<double>>& X) {
    if (line_counts.empty() || line_counts.size() != X.size())
        throw std::invalid_argument("fit_bucket_scalers: bad shapes");
    const std::size_t n_features = X[0].size();

    std::vector<long> sorted = line_counts;
    std::sort(sorted.begin(), sorted.end());
    // Tertiles: smallest value v with #(x <= v) >= k*n/3.
    auto tertile = [&](std::size_t k) {
        const std::size_t rank = (k * sorted.size() + 2) / 3;  // ceil
        return sorted[rank == 0 ? 0 : rank - 1];
    };
    BucketScaler scaler;
    scaler.boundaries[0] = tertile(1);
    scaler.boundaries[1] = tertile(2);

    std::array<std::vector<std::size_t>, 3> members;
    for (std::size_t i = 0; i < line_counts.size(); ++i)
        members[scaler.bucket_of(line_counts[i])].push_back(i);

    for (int b = 0; b < 3; ++b) {
        scaler.mean[b].assign(n_features, 0.0);
        scaler.stddev[b].assign(n_features, 0.0);
        const auto& rows = members[b];
        if (rows.empty()) continue;
        for (std::size_t i : rows)
            for (std::size_t j = 0; j < n_features; ++j) scaler.mean[b][j] += X[i][j];
        for (std::size_t j = 0; j < n_features; ++j)
            scaler.mean[b][j] /= static_cast<double>(rows.size());
        for (std::size_t i : rows)
            for (std::size_t j = 0; j < n_features; ++j) {
                const double d = X[i][j] - scaler.mean[b][j];
                scaler.stddev[b][j] += d * d;
            }
        for (std::size_t j = 0; j < n_features; ++j)
            scaler.stddev[b][j] = std::sqrt(scaler.stddev[b][j] /
                                            static_cast<double>(rows.size()));
    }

    // An empty bucket (tied tertiles or no counts past the upper boundary)
    // merges with its populated neighbour: it inherits that bucket's
    // parameters, and the event is recorded.
    for (int b = 0; b < 3; ++b) {
        if (!members[b].empty()) continue;
        int src = -1;
        for (int d = 1; d < 3 && src < 0; ++d) {
            if (b - d >= 0 && !members[b - d].empty()) src = b - d;
            else if (b + d < 3 && !members[b + d].empty()) src = b + d;
        }
        scaler.mean[b] = scaler.mean[src];
        scaler.stddev[b] = scaler.stddev[src];
        scaler.notes.push_back("bucket " + std::to_string(b) + " empty; merged with bucket " +
                               std::to_string(src));
    }
    return scaler;
}

// ---------------------------------------------------------------------------
// Threshold tuning
// ---------------------------------------------------------------------------

double tune_threshold_on_probabilities(const std::vector<double>& probabilities,
                                       const std::vector<int>& y_val) {
    if (probabilities.size() != y_val.size() || probabilities.empty())
        throw std::invalid_argument("tune_threshold: bad shapes");
    check_binary_labels(y_val);

    double best_t = 0.01;
    double best_score = -1.0;
    std::vector<int> pred(y_val.size());
    for (int step = 1; step <= 99; ++step) {
        const double t = static_cast<double>(step) / 100.0;
        for (std::size_t i = 0; i < probabilities.size(); ++i)
            pred[i] = probabilities[i] >= t ? 1 : 0;
        const double score = macro_f1(y_val, pred).macro_f1;
        if (score > best_score + 1e-12) {
            best_score = score;
            best_t = t;
        }
    }
    return best_t;
}

double tune_threshold(const LogisticRegressionModel& model,
                      const std::vector<std::vector<double>>& X_val,
                      const std::vector<int>& y_val) {
    std::vector<double> probs;
    probs.reserve(X_val.size());
    for (const auto& x : X_val) probs.push_back(logreg_proba(model, x));
    return tune_threshold_on_probabilities(probs, y_val);
}

}  // namespace mgcd
