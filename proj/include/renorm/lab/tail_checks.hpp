#pragma once

#include <cstdint>
#include <vector>

#include "renorm/lab/weighted_tree.hpp"
#include "renorm/report/check.hpp"
#include "renorm/subspace/verify.hpp"

namespace renorm {

/// E_f: the span of f r_{n_1}, ..., f r_{n_K} over the leaf cells of a tree.
Subspace weighted_span(const WeightedTree& tree, WeightPtr f);

struct LogTailResult {
    double x0 = 0.0;  // f(x0) = 1 on (0, 1/e)
    double t0 = 0.0;  // f(x0^2 / e)
    std::vector<double> t_grid;
    std::vector<double> x_t;         // f^{-1}(t) on the decreasing branch = F_f(t)
    std::vector<double> upper_mass;  // int_{f > t} f = W(x_t)
    std::vector<double> tail;        // int_t^inf F_f = W(x_t) - t x_t
    std::vector<double> bound;       // 1 / (4 ln 4t)
    std::vector<Check> checks;
};

/// Default grid: 50 log-spaced points on [max(10, t0), 1e4].
std::vector<double> default_log_tail_grid(int points = 50);

/// Tail lower bound for the log weight from the inverse function and the
/// exact antiderivative, with the two auxiliary inequalities.
LogTailResult log_weight_tail_check(const std::vector<double>& t_grid);

struct RademacherTailResult {
    int dimension = 0;
    IndexCurve g_curve;
    double slope = 0.0;  // of log G against t^2 on the fit window
    double intercept = 0.0;
    double r_squared = 0.0;
    double c1 = 0.0;  // G(t) <= c2 exp(-c1^2 t^2 / 2) on the sampled grid
    double c2 = 0.0;
    double fit_lo = 0.5;
    double fit_hi = 3.0;
    SmoothnessClass smoothness;
    std::vector<Check> checks;
};

RademacherTailResult rademacher_tail_check(std::size_t sample_count, const std::vector<double>& t_grid,
                                           std::uint64_t seed, int dimension = 8, int refinement_steps = 3);

struct WeightedTailResult {
    IndexCurve g_curve;
    std::vector<double> weight_tail;  // int_t^inf F_f for f itself
    std::vector<double> bound;        // 1/(4 ln 4t), where t > t0
    SmoothnessClass smoothness;
    std::vector<Check> checks;
};

/// G curve of E_f: it dominates the tail of f (f r_{n_1} is a unit vector of
/// E_f with |f r_{n_1}| = f) and so decays sub-polynomially.
WeightedTailResult weighted_tail_check(const WeightedTree& tree, WeightPtr f, const std::vector<double>& t_grid,
                                       const SamplerConfig& sampler);

}  // namespace renorm
