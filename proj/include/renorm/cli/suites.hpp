#pragma once

#include <string>
#include <vector>

#include "renorm/report/artifacts.hpp"
#include "renorm/report/config.hpp"
#include "renorm/subspace/indexes.hpp"
#include "renorm/subspace/verify.hpp"

namespace renorm {

inline const std::vector<std::string> kSuiteNames{"orlicz", "lemma", "theorem-a", "theorem-b", "tail", "tree"};

/// Subspaces used by the theorem suites when none are given.
std::vector<std::string> default_theorem_spans();

SuiteOutput suite_orlicz(const ExperimentConfig& cfg);
SuiteOutput suite_lemma(const ExperimentConfig& cfg);
SuiteOutput suite_theorem_a(const ExperimentConfig& cfg, const std::vector<std::string>& spans);
SuiteOutput suite_theorem_b(const ExperimentConfig& cfg, const std::vector<std::string>& spans);
SuiteOutput suite_tail(const ExperimentConfig& cfg);
SuiteOutput suite_tree(const ExperimentConfig& cfg, const std::string& weight = "logweight");

/// Config echo stored in reports (output_dir dropped so artifacts do not
/// depend on where they were written).
nlohmann::json echo(const ExperimentConfig& cfg);
SamplerConfig sampler(const ExperimentConfig& cfg, std::size_t samples);
nlohmann::json curve_json(const IndexCurve& c);
nlohmann::json smoothness_json(const SmoothnessClass& s);

/// Dispatch by name; spans empty means the defaults.
SuiteOutput run_suite(const std::string& name, const ExperimentConfig& cfg, const std::vector<std::string>& spans = {});

/// File-name form of a subspace label.
std::string artifact_stem(const std::string& label);

}  // namespace renorm
