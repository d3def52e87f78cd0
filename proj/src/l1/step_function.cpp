#include "renorm/l1/step_function.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "renorm/report/format.hpp"
#include "renorm/simd/kernels.hpp"

namespace renorm {

StepFunction::StepFunction(int level, std::vector<double> values) : level_(level), values_(std::move(values)) {
    if (level < 0 || level > kMaxStepLevel) throw std::invalid_argument("step function level out of range");
    if (values_.size() != (std::size_t{1} << level)) {
        throw std::invalid_argument("step function needs exactly 2^level values");
    }
}

StepFunction StepFunction::constant(double c, int level) {
    return StepFunction(level, std::vector<double>(std::size_t{1} << level, c));
}

int dyadic_level(double x) {
    for (int m = 0; m <= kMaxStepLevel; ++m) {
        const double scaled = std::ldexp(x, m);
        if (scaled == std::floor(scaled)) return m;
    }
    return -1;
}

StepFunction StepFunction::indicator(double a, double b, double h) {
    if (!(0.0 <= a && a <= b && b <= 1.0)) throw std::invalid_argument("indicator: need 0 <= a <= b <= 1");
    const int la = dyadic_level(a);
    const int lb = dyadic_level(b);
    if (la < 0 || lb < 0) throw std::invalid_argument("indicator: endpoints must be dyadic of level <= 24");
    const int m = std::max(la, lb);
    std::vector<double> v(std::size_t{1} << m, 0.0);
    const auto ia = static_cast<std::size_t>(std::ldexp(a, m));
    const auto ib = static_cast<std::size_t>(std::ldexp(b, m));
    for (std::size_t i = ia; i < ib; ++i) v[i] = h;
    return StepFunction(m, std::move(v));
}

double StepFunction::cell_measure() const { return std::ldexp(1.0, -level_); }

double StepFunction::value_at(double x) const {
    if (x < 0.0 || x >= 1.0) return 0.0;
    return values_[static_cast<std::size_t>(std::ldexp(x, level_))];
}

StepFunction StepFunction::refine(int m) const {
    if (m < level_) throw std::invalid_argument("refine: target level below current level");
    const std::size_t rep = std::size_t{1} << (m - level_);
    std::vector<double> v;
    v.reserve(values_.size() * rep);
    for (double x : values_) v.insert(v.end(), rep, x);
    return StepFunction(m, std::move(v));
}

StepFunction rademacher(int n) {
    if (n < 1 || n > kMaxStepLevel) throw std::invalid_argument("rademacher: n must be in [1, 24]");
    std::vector<double> v(std::size_t{1} << n);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (i & 1) ? -1.0 : 1.0;
    return StepFunction(n, std::move(v));
}

// Dyadic cell measures are powers of two, so scaling the cell sums is exact
// and refinement leaves these quantities bit-identical.
double l1_norm(const StepFunction& f) { return simd::abs_sum(f.values()) * f.cell_measure(); }

double distribution(const StepFunction& f, double t) {
    return static_cast<double>(simd::count_above(f.values(), t)) * f.cell_measure();
}

double tail_integral(const StepFunction& f, double t) { return simd::tail_sum(f.values(), t) * f.cell_measure(); }

StepFunction conditional_expectation(const StepFunction& f, int k) {
    if (k < 0) throw std::invalid_argument("conditional_expectation: negative level");
    if (k >= f.level()) return f.refine(k);
    const std::size_t group = std::size_t{1} << (f.level() - k);
    std::vector<double> v(std::size_t{1} << k);
    for (std::size_t i = 0; i < v.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < group; ++j) s += f[i * group + j];
        v[i] = s / static_cast<double>(group);
    }
    return StepFunction(k, std::move(v));
}

void write_csv(std::ostream& os, const StepFunction& f) {
    os << "cell_index,value\n";
    for (std::size_t i = 0; i < f.size(); ++i) os << i << ',' << format_real(f[i]) << '\n';
}

StepFunction read_step_csv(std::istream& is) {
    std::vector<double> values;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(field, &used);
            values.push_back(v);
        } catch (const std::exception&) {
            if (values.empty()) continue;  // header row
            throw std::invalid_argument("step file: unparsable value '" + field + "'");
        }
    }
    if (values.empty() || !std::has_single_bit(values.size())) {
        throw std::invalid_argument("step file: value count must be a nonzero power of two");
    }
    const int level = std::countr_zero(values.size());
    return StepFunction(level, std::move(values));
}

}  // namespace renorm
