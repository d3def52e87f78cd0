#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace renorm {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "linear:min:max:count", "log:min:max:count" or "list:v1,v2,...".
struct GridSpec {
    std::string text;
    std::vector<double> values() const;
};

GridSpec parse_grid(const std::string& text);

struct ExperimentConfig {
    std::uint64_t seed = 1;
    int step_level = 16;
    std::size_t sample_count = 100000;
    /// Pairs per argument for delta / rho / Figiel / lemma sampling.
    std::size_t pair_count = 10000;
    /// Sphere samples for E_f, whose functionals cost far more per sample.
    std::size_t weighted_sample_count = 2000;
    int refinement_steps = 3;
    int grid_points = 720;
    std::size_t inequality_samples = 1000000;
    std::size_t solver_functions = 1000;
    double tolerance_scalar = 1e-10;
    double tolerance_quadrature = 1e-8;
    GridSpec t_grid{"linear:0.05:0.95:19"};
    GridSpec epsilon_grid{"list:0.25,0.5,1,1.5,2"};
    GridSpec tau_grid{"list:0.05,0.1,0.2,0.5,1"};
    GridSpec g_grid{"linear:0:4:41"};
    GridSpec rademacher_grid{"linear:0.1:4:40"};
    GridSpec weighted_grid{"log:1:10000:50"};
    /// Empty: 50 log-spaced points on [max(10, t0), 1e4].
    GridSpec tail_grid{""};
    double eta = 0.9;
    int depth = 5;
    int rademacher_dimension = 8;
    std::string output_dir = "out";

    /// Throws ConfigError on the first violated invariant.
    void validate() const;
};

/// Overlays the keys of a flat JSON object; unknown keys are errors.
void apply_json(ExperimentConfig& cfg, const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace renorm
