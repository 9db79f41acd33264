#include "mgcd/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mgcd {

ParseError::ParseError(std::size_t line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
      line_no_(line_no) {}

std::string sanitize_utf8(const std::string& bytes) {
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const auto n = bytes.size();
    auto is_cont = [&](std::size_t k) {
        return k < n && (static_cast<unsigned char>(bytes[k]) & 0xC0) == 0x80;
    };
    while (i < n) {
        const auto b = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        if (b < 0x80) {
            len = 1;
        } else if ((b & 0xE0) == 0xC0 && b >= 0xC2) {
            len = 2;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
        } else if ((b & 0xF8) == 0xF0 && b <= 0xF4) {
            len = 4;
        }
        bool ok = len > 0;
        for (std::size_t k = 1; ok && k < len; ++k) ok = is_cont(i + k);
        if (ok && len == 3) {
            const auto b1 = static_cast<unsigned char>(bytes[i + 1]);
            if (b == 0xE0 && b1 < 0xA0) ok = false;             // overlong
            if (b == 0xED && b1 >= 0xA0) ok = false;            // surrogates
        }
        if (ok && len == 4) {
            const auto b1 = static_cast<unsigned char>(bytes[i + 1]);
            if (b == 0xF0 && b1 < 0x90) ok = false;             // overlong
            if (b == 0xF4 && b1 >= 0x90) ok = false;            // > U+10FFFF
        }
        if (ok) {
            out.append(bytes, i, len);
            i += len;
        } else {
            out += "\xEF\xBF\xBD";  // U+FFFD
            i += 1;
        }
    }
    return out;
}

namespace {

CodeSample sample_from_json(const nlohmann::json& obj, std::size_t line_no) {
    if (!obj.is_object()) throw ParseError(line_no, "expected a JSON object");
    if (!obj.contains("id") || !obj["id"].is_string())
        throw ParseError(line_no, "missing id");
    if (!obj.contains("code") || !obj["code"].is_string())
        throw ParseError(line_no, "missing code");
    CodeSample sample;
    sample.id = obj["id"].get<std::string>();
    if (sample.id.empty()) throw ParseError(line_no, "empty id");
    sample.code = obj["code"].get<std::string>();
    if (obj.contains("label") && !obj["label"].is_null()) {
        const auto& l = obj["label"];
        long v = -1;
        if (l.is_number_integer()) v = l.get<long>();
        if (v != 0 && v != 1)
            throw ParseError(line_no, "label must be 0 or 1");
        sample.label = static_cast<int>(v);
    }
    if (obj.contains("language") && !obj["language"].is_null()) {
        if (!obj["language"].is_string())
            throw ParseError(line_no, "language must be a string");
        sample.language = obj["language"].get<std::string>();
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (it.key() == "id" || it.key() == "code" || it.key() == "label" ||
            it.key() == "language")
            continue;
        if (sample.extra.is_null()) sample.extra = nlohmann::json::object();
        sample.extra[it.key()] = it.value();
    }
    return sample;
}

nlohmann::json sample_to_json(const CodeSample& sample) {
    nlohmann::json obj;
    obj["id"] = sample.id;
    obj["code"] = sample.code;
    if (sample.label) obj["label"] = *sample.label;
    if (sample.language) obj["language"] = *sample.language;
    if (sample.extra.is_object()) {
        for (auto it = sample.extra.begin(); it != sample.extra.end(); ++it)
            obj[it.key()] = it.value();
    }
    return obj;
}

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::vector<CodeSample> parse_jsonl(const std::string& content) {
    std::vector<CodeSample> corpus;
    std::unordered_set<std::string> seen_ids;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(sanitize_utf8(line));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
        CodeSample sample = sample_from_json(obj, line_no);
        if (!seen_ids.insert(sample.id).second)
            throw ParseError(line_no, "duplicate id \"" + sample.id + "\"");
        corpus.push_back(std::move(sample));
    }
    return corpus;
}

std::vector<CodeSample> load_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_jsonl(buf.str());
}

std::string serialize_jsonl(const std::vector<CodeSample>& corpus) {
    std::string out;
    for (const auto& sample : corpus) {
        out += sample_to_json(sample).dump();
        out += '\n';
    }
    return out;
}

void save_jsonl(const std::vector<CodeSample>& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_jsonl(corpus);
}

nlohmann::json EvalReport::to_json() const {
    nlohmann::json j;
    j["confusion"] = {{confusion[0][0], confusion[0][1]},
                      {confusion[1][0], confusion[1][1]}};
    j["f1_class0"] = f1_class0;
    j["f1_class1"] = f1_class1;
    j["macro_f1"] = macro_f1;
    j["n"] = n;
    return j;
}

EvalReport macro_f1(const std::vector<int>& gold, const std::vector<int>& pred) {
    if (gold.empty() || gold.size() != pred.size())
        throw std::invalid_argument("macro_f1: sequences must be nonempty and equal length");
    EvalReport report;
    report.n = gold.size();
    for (std::size_t i = 0; i < gold.size(); ++i) {
        if ((gold[i] != 0 && gold[i] != 1) || (pred[i] != 0 && pred[i] != 1))
            throw std::invalid_argument("macro_f1: labels must be 0 or 1");
        report.confusion[gold[i]][pred[i]]++;
    }
    auto f1_for = [&](int c) {
        const double tp = static_cast<double>(report.confusion[c][c]);
        const double fp = static_cast<double>(report.confusion[1 - c][c]);
        const double fn = static_cast<double>(report.confusion[c][1 - c]);
        const double precision = (tp + fp) > 0 ? tp / (tp + fp) : 0.0;
        const double recall = (tp + fn) > 0 ? tp / (tp + fn) : 0.0;
        return (precision + recall) > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
    };
    report.f1_class0 = f1_for(0);
    report.f1_class1 = f1_for(1);
    report.macro_f1 = 0.5 * (report.f1_class0 + report.f1_class1);
    return report;
}

double ks_statistic(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_statistic: inputs must be nonempty");
    std::vector<double> sa = a;
    std::vector<double> sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    auto ecdf = [](const std::vector<double>& sorted, double x) {
        const auto count = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        return static_cast<double>(count) / static_cast<double>(sorted.size());
    };
    double d = 0.0;
    for (const auto& points : {sa, sb}) {
        for (double x : points)
            d = std::max(d, std::abs(ecdf(sa, x) - ecdf(sb, x)));
    }
    return d;
}

ThresholdStats threshold_analysis(const std::vector<double>& scores,
                                  const std::vector<int>& gold, double threshold) {
    if (scores.size() != gold.size() || scores.empty())
        throw std::invalid_argument("threshold_analysis: length mismatch or empty input");
    std::size_t n0 = 0, n1 = 0;
    for (int g : gold) (g == 0 ? n0 : n1)++;
    if (n0 == 0 || n1 == 0)
        throw std::invalid_argument("threshold_analysis: both classes must be present");

    auto rates_at = [&](double t) {
        std::size_t neg_below = 0, pos_above = 0;
        for (std::size_t i = 0; i < scores.size(); ++i) {
            if (gold[i] == 0 && scores[i] <= t) ++neg_below;
            if (gold[i] == 1 && scores[i] > t) ++pos_above;
        }
        const double specificity = static_cast<double>(neg_below) / static_cast<double>(n0);
        const double sensitivity = static_cast<double>(pos_above) / static_cast<double>(n1);
        return std::make_pair(specificity, sensitivity);
    };

    ThresholdStats stats;
    const auto [spec, sens] = rates_at(threshold);
    stats.specificity = spec;
    stats.flag_rate_on_positive = sens;

    std::vector<double> distinct = scores;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<double> candidates;
    candidates.push_back(distinct.front() - 1.0);
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
        candidates.push_back(0.5 * (distinct[i] + distinct[i + 1]));
    candidates.push_back(distinct.back());

    double best_j = -2.0;
    double best_t = candidates.front();
    for (double t : candidates) {
        const auto [s, se] = rates_at(t);
        const double j = se + s - 1.0;
        if (j > best_j + 1e-15 || (std::abs(j - best_j) <= 1e-15 && t < best_t)) {
            best_j = j;
            best_t = t;
        }
    }
    stats.youden_j_optimal_threshold = best_t;
    return stats;
}

namespace {

// std::shuffle is implementation-defined; keep the permutation pinned.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace

std::pair<std::vector<CodeSample>, std::vector<CodeSample>>
split(const std::vector<CodeSample>& corpus, double fraction, std::uint64_t seed) {
    if (corpus.empty()) throw std::invalid_argument("split: empty corpus");
    if (!(fraction > 0.0 && fraction < 1.0))
        throw std::invalid_argument("split: fraction must lie in (0,1)");

    // Strata keyed by label: 0, 1, or unlabeled (2).
    std::array<std::vector<std::size_t>, 3> strata;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        strata[corpus[i].label ? static_cast<std::size_t>(*corpus[i].label) : 2].push_back(i);

    std::mt19937_64 rng(seed);
    std::vector<bool> in_train(corpus.size(), false);
    for (auto& stratum : strata) {
        if (stratum.empty()) continue;
        deterministic_shuffle(stratum, rng);
        const auto take = static_cast<std::size_t>(
            std::floor(fraction * static_cast<double>(stratum.size()) + 1e-9));
        for (std::size_t k = 0; k < take; ++k) in_train[stratum[k]] = true;
    }

    std::pair<std::vector<CodeSample>, std::vector<CodeSample>> result;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        (in_train[i] ? result.first : result.second).push_back(corpus[i]);
    return result;
}

}  // namespace mgcd
