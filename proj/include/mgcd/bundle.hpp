#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mgcd/decision.hpp"

namespace mgcd {

inline constexpr int kBundleSchemaVersion = 1;

class BundleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bundle directory layout: manifest.json plus one JSON file per component
// (langid, linecls, scaler, classifier, heuristics, lexicon). The manifest
// carries the schema version, per-file checksums, and a config echo.
void save_bundle(const PipelineModel& pipeline, const std::string& directory);
PipelineModel load_bundle(const std::string& directory);

// Component (de)serialization, exposed for tests and tooling.
nlohmann::json vectorizer_to_json(const NgramVectorizer& v);
NgramVectorizer vectorizer_from_json(const nlohmann::json& j);
nlohmann::json langid_to_json(const LangIdModel& m);
LangIdModel langid_from_json(const nlohmann::json& j);
nlohmann::json linecls_to_json(const LineClassifierModel& m);
LineClassifierModel linecls_from_json(const nlohmann::json& j);
nlohmann::json scaler_to_json(const BucketScaler& s);
BucketScaler scaler_from_json(const nlohmann::json& j);
nlohmann::json classifier_to_json(const PipelineModel& m);
nlohmann::json heuristics_to_json(const HeuristicConfig& h);
HeuristicConfig heuristics_from_json(const nlohmann::json& j);
nlohmann::json lexicon_to_json(const VerbLexicon& lex);
VerbLexicon lexicon_from_json(const nlohmann::json& j);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace mgcd
