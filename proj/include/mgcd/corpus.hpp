#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mgcd {

// One snippet, the unit of classification. `code` is kept verbatim
// (trailing whitespace and newline style included).
struct CodeSample {
    std::string id;
    std::string code;
    std::optional<int> label;           // 0 = human-written, 1 = machine-generated
    std::optional<std::string> language; // declared language tag, if any
    nlohmann::json extra;               // unknown JSONL keys, preserved on round-trip
};

struct EvalReport {
    // confusion[gold][pred]
    std::array<std::array<std::int64_t, 2>, 2> confusion{};
    double f1_class0 = 0.0;
    double f1_class1 = 0.0;
    double macro_f1 = 0.0;
    std::size_t n = 0;

    nlohmann::json to_json() const;
};

struct ThresholdStats {
    double specificity = 0.0;             // gold-0 samples with score <= threshold
    double flag_rate_on_positive = 0.0;   // gold-1 samples with score > threshold
    double youden_j_optimal_threshold = 0.0;
};

// Parse/validation failure tied to a 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line_no, const std::string& message);
    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

std::vector<CodeSample> load_jsonl(const std::string& path);
std::vector<CodeSample> parse_jsonl(const std::string& content);
void save_jsonl(const std::vector<CodeSample>& corpus, const std::string& path);
std::string serialize_jsonl(const std::vector<CodeSample>& corpus);

EvalReport macro_f1(const std::vector<int>& gold, const std::vector<int>& pred);

// Supremum |ECDF_a - ECDF_b| over all observed points.
double ks_statistic(const std::vector<double>& a, const std::vector<double>& b);

ThresholdStats threshold_analysis(const std::vector<double>& scores,
                                  const std::vector<int>& gold,
                                  double threshold);

// Deterministic, label-stratified split. Returns (train, held-out).
std::pair<std::vector<CodeSample>, std::vector<CodeSample>>
split(const std::vector<CodeSample>& corpus, double fraction, std::uint64_t seed);

// Replaces invalid UTF-8 byte sequences with U+FFFD.
std::string sanitize_utf8(const std::string& bytes);

}  // namespace mgcd
