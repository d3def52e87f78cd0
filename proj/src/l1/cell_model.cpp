#include "renorm/l1/cell_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "renorm/l1/pattern_integral.hpp"
#include "renorm/orlicz/orlicz.hpp"
#include "renorm/simd/kernels.hpp"

namespace renorm {

StepModel::StepModel(int level) : level_(level) {
    if (level < 0 || level > kMaxStepLevel) throw std::invalid_argument("step model level out of range");
}

std::string StepModel::describe() const { return "step:" + std::to_string(level_); }

double StepModel::l1(std::span<const double> c) const { return std::ldexp(simd::abs_sum(c), -level_); }

double StepModel::distribution(std::span<const double> c, double t) const {
    return std::ldexp(static_cast<double>(simd::count_above(c, t)), -level_);
}

double StepModel::tail(std::span<const double> c, double t) const { return std::ldexp(simd::tail_sum(c, t), -level_); }

double StepModel::modular(std::span<const double> c, double lambda) const {
    return std::ldexp(simd::modular_sum(c, 1.0 / lambda), -level_);
}

double StepModel::gram_mass(std::size_t) const { return std::ldexp(1.0, -level_); }

double StepModel::sup_abs(std::span<const double> c) const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

WeightedModel::WeightedModel(std::vector<DyadicSet> cells, WeightPtr weight, double quadrature_tolerance)
    : cells_(std::move(cells)), weight_(std::move(weight)), quad_tol_(quadrature_tolerance) {
    if (cells_.empty()) throw std::invalid_argument("weighted model needs at least one cell");
    const WeightIntegrand w(*weight_);
    mass_.reserve(cells_.size());
    for (const auto& cell : cells_) {
        mass_.push_back(integrate_set(w, cell));
        double far = 0.0;
        if (!cell.constraints().empty()) {
            far = std::min(1.0, std::ldexp(1.0, kFarPeriodsLog2 + 1 - cell.constraints().front().position));
        }
        far_.push_back(far);
        prefix_weight_.push_back(far > 0.0 ? integrate_set(w, cell, 0.0, far) : 0.0);
        prefix_measure_.push_back(far > 0.0 ? integrate_set(ConstantIntegrand{}, cell, 0.0, far) : 0.0);
    }
}

std::string WeightedModel::describe() const {
    return "weighted:" + weight_->name() + ":" + std::to_string(cells_.size());
}

double WeightedModel::cell_weight_integral(std::size_t s, double a, double b) const {
    if (a <= 0.0 && far_[s] > 0.0 && b > far_[s]) {
        return prefix_weight_[s] + integrate_set(WeightIntegrand(*weight_), cells_[s], far_[s], b);
    }
    return integrate_set(WeightIntegrand(*weight_), cells_[s], a, b);
}

double WeightedModel::cell_measure(std::size_t s, double a, double b) const {
    if (a <= 0.0 && far_[s] > 0.0 && b > far_[s]) {
        return prefix_measure_[s] + integrate_set(ConstantIntegrand{}, cells_[s], far_[s], b);
    }
    return integrate_set(ConstantIntegrand{}, cells_[s], a, b);
}

double WeightedModel::l1(std::span<const double> c) const {
    double total = 0.0;
    for (std::size_t s = 0; s < cells_.size(); ++s) total += std::abs(c[s]) * mass_[s];
    return total;
}

double WeightedModel::distribution(std::span<const double> c, double t) const {
    double total = 0.0;
    for (std::size_t s = 0; s < cells_.size(); ++s) {
        const double a = std::abs(c[s]);
        if (a == 0.0) continue;
        for (const auto& iv : weight_->superlevel(t / a)) total += cell_measure(s, iv.lo, iv.hi);
    }
    return total;
}

double WeightedModel::tail(std::span<const double> c, double t) const {
    double total = 0.0;
    for (std::size_t s = 0; s < cells_.size(); ++s) {
        const double a = std::abs(c[s]);
        if (a == 0.0) continue;
        double cell = 0.0;
        for (const auto& iv : weight_->superlevel(t / a)) {
            cell += a * cell_weight_integral(s, iv.lo, iv.hi) - t * cell_measure(s, iv.lo, iv.hi);
        }
        total += std::max(0.0, cell);
    }
    return total;
}

double WeightedModel::cell_modular(std::size_t s, double scale) const {
    if (scale == 0.0) return 0.0;
    // M(scale w) is logarithmic where scale w > 1 and quadratic elsewhere.
    const auto upper = weight_->superlevel(1.0 / scale);
    const LogModularIntegrand logpart(*weight_, scale, quad_tol_);
    const SquaredWeightIntegrand square(*weight_, quad_tol_);
    double total = 0.0;
    double cursor = 0.0;
    for (const auto& iv : upper) {
        if (iv.lo > cursor) total += scale * scale * integrate_set(square, cells_[s], cursor, iv.lo);
        total += 6.0 * scale * cell_weight_integral(s, iv.lo, iv.hi) - 5.0 * cell_measure(s, iv.lo, iv.hi) -
                 8.0 * integrate_set(logpart, cells_[s], iv.lo, iv.hi);
        cursor = iv.hi;
    }
    if (cursor < 1.0) total += scale * scale * integrate_set(square, cells_[s], cursor, 1.0);
    return total;
}

double WeightedModel::modular(std::span<const double> c, double lambda) const {
    double total = 0.0;
    for (std::size_t s = 0; s < cells_.size(); ++s) total += cell_modular(s, std::abs(c[s]) / lambda);
    return total;
}

double WeightedModel::sup_abs(std::span<const double> c) const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m == 0.0 ? 0.0 : m * weight_->sup();
}

CellFunction as_cell_function(const StepFunction& f) {
    return {std::make_shared<StepModel>(f.level()), std::vector<double>(f.values().begin(), f.values().end())};
}

CellFunction as_cell_function(WeightPtr w, double quadrature_tolerance) {
    return {std::make_shared<WeightedModel>(std::vector<DyadicSet>{DyadicSet::full()}, std::move(w),
                                            quadrature_tolerance),
            {1.0}};
}

double l1_norm(const CellFunction& f) { return f.model->l1(f.values); }
double distribution(const CellFunction& f, double t) { return f.model->distribution(f.values, t); }
double tail_integral(const CellFunction& f, double t) { return f.model->tail(f.values, t); }

double modular(const CellModel& model, std::span<const double> c, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("modular: lambda must be positive");
    return model.modular(c, lambda);
}

double modular(const StepFunction& f, double lambda) { return modular(StepModel(f.level()), f.values(), lambda); }
double modular(const CellFunction& f, double lambda) { return modular(*f.model, f.values, lambda); }
double modular(WeightPtr w, double lambda) { return modular(as_cell_function(std::move(w)), lambda); }

NormSolution luxemburg_norm(const CellModel& model, std::span<const double> c, double tolerance) {
    if (!(tolerance >= 0.0)) throw std::invalid_argument("luxemburg_norm: negative tolerance");
    return solve_luxemburg([&](double lambda) { return model.modular(c, lambda); }, model.l1(c), tolerance);
}

NormSolution luxemburg_norm(const StepFunction& f, double tolerance) {
    return luxemburg_norm(StepModel(f.level()), f.values(), tolerance);
}

NormSolution luxemburg_norm(const CellFunction& f, double tolerance) {
    return luxemburg_norm(*f.model, f.values, tolerance);
}

}  // namespace renorm
