#include "renorm/cli/specs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "renorm/lab/tail_checks.hpp"

namespace renorm {

namespace {

std::vector<std::string> words(const std::string& s, char sep = ' ') {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string w;
    while (std::getline(in, w, sep)) {
        if (!w.empty()) out.push_back(w);
    }
    return out;
}

double number(const std::string& s, const std::string& spec) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw SpecError("'" + spec + "': bad number '" + s + "'");
    return v;
}

int integer(const std::string& s, const std::string& spec) {
    const double v = number(s, spec);
    if (v != std::floor(v) || std::abs(v) > 1e6) throw SpecError("'" + spec + "': expected an integer, got '" + s + "'");
    return static_cast<int>(v);
}

Subspace read_basis_file(const std::string& path, const std::string& spec) {
    std::ifstream in(path);
    if (!in) throw SpecError("'" + spec + "': cannot open '" + path + "'");
    std::string line;
    std::vector<std::vector<double>> columns;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = words(line, ',');
        if (first) {
            first = false;
            if (!cells.empty() && (std::isalpha(static_cast<unsigned char>(cells[0][0])) || cells[0][0] == '_')) continue;
        }
        if (cells.size() < 2) throw SpecError("'" + spec + "': need cell_index plus at least one column");
        if (columns.empty()) columns.resize(cells.size() - 1);
        if (cells.size() - 1 != columns.size()) throw SpecError("'" + spec + "': ragged rows");
        if (integer(cells[0], spec) != static_cast<int>(columns[0].size())) {
            throw SpecError("'" + spec + "': cell_index must count up from 0");
        }
        for (std::size_t j = 1; j < cells.size(); ++j) columns[j - 1].push_back(number(cells[j], spec));
    }
    if (columns.empty()) throw SpecError("'" + spec + "': no rows");
    const std::size_t n = columns[0].size();
    int level = 0;
    while ((std::size_t{1} << level) < n) ++level;
    if ((std::size_t{1} << level) != n || level > 24) throw SpecError("'" + spec + "': row count must be 2^m, m <= 24");
    std::vector<StepFunction> fns;
    for (auto& c : columns) fns.emplace_back(level, std::move(c));
    return step_span(fns, "file:" + path);
}

}  // namespace

ParsedFunction parse_function_spec(const std::string& spec, double quadrature_tolerance) {
    const auto w = words(spec);
    if (w.empty()) throw SpecError("empty function spec");
    try {
        if (w[0] == "constant") {
            if (w.size() != 2) throw SpecError("'" + spec + "': usage 'constant c'");
            return {spec, as_cell_function(StepFunction::constant(number(w[1], spec)))};
        }
        if (w[0] == "indicator") {
            if (w.size() != 4) throw SpecError("'" + spec + "': usage 'indicator a b h'");
            return {spec, as_cell_function(StepFunction::indicator(number(w[1], spec), number(w[2], spec),
                                                                   number(w[3], spec)))};
        }
        if (w[0] == "rademacher") {
            if (w.size() != 2) throw SpecError("'" + spec + "': usage 'rademacher n'");
            const int n = integer(w[1], spec);
            if (n < 1 || n > 24) throw SpecError("'" + spec + "': n must lie in [1, 24]");
            return {spec, as_cell_function(rademacher(n))};
        }
        if (w[0] == "logweight") {
            if (w.size() != 1) throw SpecError("'" + spec + "': usage 'logweight'");
            return {spec, as_cell_function(log_weight(), quadrature_tolerance)};
        }
    } catch (const SpecError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SpecError("'" + spec + "': " + e.what());
    }
    std::ifstream in(spec);
    if (!in) throw SpecError("'" + spec + "': not a built-in function and not a readable step file");
    try {
        return {spec, as_cell_function(read_step_csv(in))};
    } catch (const std::exception& e) {
        throw SpecError("'" + spec + "': " + e.what());
    }
}

WeightPtr parse_weight_spec(const std::string& spec) {
    if (spec == "logweight") return log_weight();
    if (spec == "uniform") return uniform_weight();
    if (spec.rfind("power:", 0) == 0) {
        try {
            return power_weight(number(spec.substr(6), spec));
        } catch (const SpecError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw SpecError("'" + spec + "': " + e.what());
        }
    }
    throw SpecError("unknown weight '" + spec + "' (expected logweight, uniform or power:a)");
}

Subspace parse_subspace_spec(const std::string& spec) {
    const auto parts = words(spec, ':');
    if (parts.empty()) throw SpecError("empty subspace spec");
    const std::string& kind = parts[0];
    try {
        if (kind == "constants" && parts.size() == 1) return constants_span();
        if (kind == "rademacher" && parts.size() == 2) {
            const int d = integer(parts[1], spec);
            if (d < 1 || d > 20) throw SpecError("'" + spec + "': d must lie in [1, 20]");
            return rademacher_span(d);
        }
        if (kind == "const-rademacher" && parts.size() == 2) {
            const int d = integer(parts[1], spec);
            if (d < 1 || d > 20) throw SpecError("'" + spec + "': d must lie in [1, 20]");
            return const_rademacher_span(d);
        }
        if (kind == "weighted" && parts.size() == 4) {
            const auto w = parse_weight_spec(parts[1]);
            const double eta = number(parts[2], spec);
            const int depth = integer(parts[3], spec);
            if (!(eta > 0.0 && eta < 1.0) || depth < 1 || depth > 12) {
                throw SpecError("'" + spec + "': need eta in (0,1) and depth in [1, 12]");
            }
            return weighted_span(build_weighted_system(w, eta, depth), w);
        }
        if (kind == "file" && spec.size() > 5) return read_basis_file(spec.substr(5), spec);
    } catch (const SpecError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SpecError("'" + spec + "': " + e.what());
    }
    throw SpecError("unknown subspace spec '" + spec +
                    "' (expected constants, rademacher:d, const-rademacher:d, weighted:<weight>:eta:depth, file:path)");
}

}  // namespace renorm
