#include "renorm/report/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace renorm {

namespace {

double to_real(const std::string& s, const std::string& grid) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
        throw ConfigError("grid '" + grid + "': bad number '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

std::vector<double> GridSpec::values() const {
    if (text.empty()) return {};
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("grid '" + text + "': missing kind prefix");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    std::vector<double> v;
    if (kind == "list") {
        for (const auto& item : split(rest, ',')) v.push_back(to_real(item, text));
    } else if (kind == "linear" || kind == "log") {
        const auto parts = split(rest, ':');
        if (parts.size() != 3) throw ConfigError("grid '" + text + "': expected min:max:count");
        const double lo = to_real(parts[0], text), hi = to_real(parts[1], text);
        const double count = to_real(parts[2], text);
        if (count < 1 || count != std::floor(count)) throw ConfigError("grid '" + text + "': bad count");
        const int n = static_cast<int>(count);
        if (kind == "log" && !(lo > 0.0)) throw ConfigError("grid '" + text + "': log grid needs min > 0");
        for (int i = 0; i < n; ++i) {
            const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            v.push_back(kind == "linear" ? lo + (hi - lo) * f : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f));
        }
        if (n > 1) v.back() = hi;
    } else {
        throw ConfigError("grid '" + text + "': unknown kind '" + kind + "'");
    }
    if (v.empty()) throw ConfigError("grid '" + text + "' is empty");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) throw ConfigError("grid '" + text + "' is not strictly increasing");
    }
    return v;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec g{text};
    g.values();
    return g;
}

void ExperimentConfig::validate() const {
    if (step_level < 0 || step_level > 24) throw ConfigError("step_level must lie in [0, 24]");
    if (sample_count < 1 || pair_count < 1 || weighted_sample_count < 1 || inequality_samples < 1 ||
        solver_functions < 1) {
        throw ConfigError("sample counts must be >= 1");
    }
    if (refinement_steps < 0) throw ConfigError("refinement_steps must be >= 0");
    if (grid_points < 8) throw ConfigError("grid_points must be >= 8");
    if (!(tolerance_scalar > 0.0) || !(tolerance_quadrature > 0.0)) throw ConfigError("tolerances must be > 0");
    if (!(eta > 0.0 && eta < 1.0)) throw ConfigError("eta must lie in (0, 1)");
    if (depth < 1) throw ConfigError("depth must be >= 1");
    if (rademacher_dimension < 1) throw ConfigError("rademacher_dimension must be >= 1");
    for (double t : t_grid.values()) {
        if (!(t > 0.0 && t < 1.0)) throw ConfigError("t_grid must lie in (0, 1)");
    }
    for (double e : epsilon_grid.values()) {
        if (!(e > 0.0 && e <= 2.0)) throw ConfigError("epsilon_grid must lie in (0, 2]");
    }
    for (double t : tau_grid.values()) {
        if (!(t > 0.0)) throw ConfigError("tau_grid must be positive");
    }
    for (double t : g_grid.values()) {
        if (!(t >= 0.0)) throw ConfigError("g_grid must be nonnegative");
    }
    for (const auto* g : {&rademacher_grid, &weighted_grid, &tail_grid}) {
        for (double t : g->values()) {
            if (!(t > 0.0)) throw ConfigError("grid '" + g->text + "' must be positive");
        }
    }
    if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

void apply_json(ExperimentConfig& c, const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "step_level") c.step_level = value.get<int>();
            else if (key == "sample_count") c.sample_count = value.get<std::size_t>();
            else if (key == "pair_count") c.pair_count = value.get<std::size_t>();
            else if (key == "weighted_sample_count") c.weighted_sample_count = value.get<std::size_t>();
            else if (key == "refinement_steps") c.refinement_steps = value.get<int>();
            else if (key == "grid_points") c.grid_points = value.get<int>();
            else if (key == "inequality_samples") c.inequality_samples = value.get<std::size_t>();
            else if (key == "solver_functions") c.solver_functions = value.get<std::size_t>();
            else if (key == "tolerance_scalar") c.tolerance_scalar = value.get<double>();
            else if (key == "tolerance_quadrature") c.tolerance_quadrature = value.get<double>();
            else if (key == "t_grid") c.t_grid = parse_grid(value.get<std::string>());
            else if (key == "epsilon_grid") c.epsilon_grid = parse_grid(value.get<std::string>());
            else if (key == "tau_grid") c.tau_grid = parse_grid(value.get<std::string>());
            else if (key == "g_grid") c.g_grid = parse_grid(value.get<std::string>());
            else if (key == "rademacher_grid") c.rademacher_grid = parse_grid(value.get<std::string>());
            else if (key == "weighted_grid") c.weighted_grid = parse_grid(value.get<std::string>());
            else if (key == "tail_grid") c.tail_grid = GridSpec{value.get<std::string>()};
            else if (key == "eta") c.eta = value.get<double>();
            else if (key == "depth") c.depth = value.get<int>();
            else if (key == "rademacher_dimension") c.rademacher_dimension = value.get<int>();
            else if (key == "output_dir") c.output_dir = value.get<std::string>();
            else throw ConfigError("config: unknown key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("config: bad value for '" + key + "': " + e.what());
        }
    }
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config: '" + path + "' is not valid JSON: " + e.what());
    }
    ExperimentConfig c;
    apply_json(c, j);
    return c;
}

nlohmann::json to_json(const ExperimentConfig& c) {
    return nlohmann::json{{"seed", c.seed},
                          {"step_level", c.step_level},
                          {"sample_count", c.sample_count},
                          {"pair_count", c.pair_count},
                          {"weighted_sample_count", c.weighted_sample_count},
                          {"refinement_steps", c.refinement_steps},
                          {"grid_points", c.grid_points},
                          {"inequality_samples", c.inequality_samples},
                          {"solver_functions", c.solver_functions},
                          {"tolerance_scalar", c.tolerance_scalar},
                          {"tolerance_quadrature", c.tolerance_quadrature},
                          {"t_grid", c.t_grid.text},
                          {"epsilon_grid", c.epsilon_grid.text},
                          {"tau_grid", c.tau_grid.text},
                          {"g_grid", c.g_grid.text},
                          {"rademacher_grid", c.rademacher_grid.text},
                          {"weighted_grid", c.weighted_grid.text},
                          {"tail_grid", c.tail_grid.text},
                          {"eta", c.eta},
                          {"depth", c.depth},
                          {"rademacher_dimension", c.rademacher_dimension},
                          {"output_dir", c.output_dir}};
}

}  // namespace renorm
