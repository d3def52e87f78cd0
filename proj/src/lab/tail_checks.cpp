#include "renorm/lab/tail_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renorm/core/root_finding.hpp"
#include "renorm/report/format.hpp"

namespace renorm {

namespace {

const char* kAnchorTail = "log weight tail: int_t^inf F_f(s) ds >= 1/(4 log 4t) for t > t0";
const char* kAnchorMass = "log weight tail: int_{f>t} f >= 1/(2 log 4t)";
const char* kAnchorLevel = "log weight tail: t F_f(t) <= 1/(4 log 4t)";
const char* kAnchorGauss = "Rademacher span: G_R(t) <= c2 exp(-c1^2 t^2 / 2)";
const char* kAnchorInherit = "G_{E_f}(t) >= int_t^inf F_f(s) ds";

std::string at(const char* what, double t) { return std::string(what) + "[" + format_short(t) + "]"; }

/// x on the decreasing branch (0, 1/e] with f(x) = t, by bisection in log x.
double inverse_by_bisection(const AnalyticWeight& f, double t) {
    auto g = [&](double x) { return f.value(x) - t; };
    return bisect_log(g, std::numeric_limits<double>::min(), std::exp(-1.0), 0.0).root;
}

}  // namespace

Subspace weighted_span(const WeightedTree& tree, WeightPtr f) {
    std::string label = "weighted:" + tree.weight_name + ":" + format_short(tree.eta) + ":" + std::to_string(tree.depth);
    return Subspace(leaf_model(tree, std::move(f)), leaf_basis(tree), std::move(label));
}

std::vector<double> default_log_tail_grid(int points) {
    const auto w = log_weight();
    const double x0 = inverse_by_bisection(*w, 1.0);
    const double t0 = w->value(x0 * x0 / std::exp(1.0));
    const double lo = std::log(std::max(10.0, t0)), hi = std::log(1e4);
    std::vector<double> g;
    for (int i = 0; i < points; ++i) g.push_back(std::exp(lo + (hi - lo) * i / (points - 1)));
    g.front() = std::max(10.0, t0);
    g.back() = 1e4;
    return g;
}

LogTailResult log_weight_tail_check(const std::vector<double>& t_grid) {
    const auto w = log_weight();
    LogTailResult r;
    r.x0 = inverse_by_bisection(*w, 1.0);
    r.t0 = w->value(r.x0 * r.x0 / std::exp(1.0));
    r.t_grid = t_grid;
    for (double t : t_grid) {
        r.checks.push_back(check_true(at("t_above_t0", t), "grid lies beyond t0 = f(x0^2/e)", t > r.t0, t, r.t0));
        const double x = inverse_by_bisection(*w, t);
        const double mass = w->antiderivative(x);
        const double tail = mass - t * x;
        const double b = 1.0 / (4.0 * std::log(4.0 * t));
        r.x_t.push_back(x);
        r.upper_mass.push_back(mass);
        r.tail.push_back(tail);
        r.bound.push_back(b);
        r.checks.push_back(check_ge(at("tail_ge_bound", t), kAnchorTail, tail, b));
        r.checks.push_back(check_ge(at("upper_mass_ge", t), kAnchorMass, mass, 2.0 * b));
        r.checks.push_back(check_le(at("level_term_le", t), kAnchorLevel, t * x, b));
        // Independent path: the generic layer-cake tail of the weight.
        r.checks.push_back(check_close(at("tail_matches_layer_cake", t), "tail integral = int (|f|-t)^+",
                                       tail, tail_integral(*w, t), 1e-12 * std::max(1.0, tail)));
    }
    return r;
}

RademacherTailResult rademacher_tail_check(std::size_t sample_count, const std::vector<double>& t_grid,
                                           std::uint64_t seed, int dimension, int refinement_steps) {
    RademacherTailResult r;
    r.dimension = dimension;
    const auto X = rademacher_span(dimension);
    SamplerConfig sc;
    sc.seed = seed;
    sc.sample_count = sample_count;
    sc.refinement_steps = refinement_steps;
    r.g_curve = index_curve(X, IndexKind::G, t_grid, sc);
    const auto& G = r.g_curve.estimates;

    bool monotone = true;
    for (std::size_t i = 1; i < G.size(); ++i) monotone = monotone && G[i] <= G[i - 1];
    r.checks.push_back(check_true("G_nonincreasing", "t -> G_X(t) is nonincreasing", monotone));

    std::vector<double> x, y;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] >= r.fit_lo && t_grid[i] <= r.fit_hi && G[i] > 0.0) {
            x.push_back(t_grid[i] * t_grid[i]);
            y.push_back(std::log(G[i]));
        }
    }
    if (x.size() >= 3) {
        const double n = static_cast<double>(x.size());
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
        mx /= n;
        my /= n;
        double sxy = 0, sxx = 0, syy = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sxy += (x[i] - mx) * (y[i] - my);
            sxx += (x[i] - mx) * (x[i] - mx);
            syy += (y[i] - my) * (y[i] - my);
        }
        r.slope = sxy / sxx;
        r.intercept = my - r.slope * mx;
        r.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
    }
    r.checks.push_back(check_le("fit_slope_negative", kAnchorGauss, r.slope, 0.0));
    r.checks.back().pass = r.slope < 0.0;
    if (r.slope < 0.0) {
        r.c1 = std::sqrt(-2.0 * r.slope);
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            if (G[i] > 0.0) r.c2 = std::max(r.c2, G[i] * std::exp(0.5 * r.c1 * r.c1 * t_grid[i] * t_grid[i]));
        }
    }
    r.checks.push_back(check_ge("fit_r_squared", "log G linear in t^2 on the fit window", r.r_squared, 0.95));
    ClassifierOptions opt;
    opt.t_fit_min = r.fit_lo;
    r.smoothness = classify_smoothness(r.g_curve, opt);
    r.checks.push_back(check_true("classified_power_2",
                                  "Gaussian tail is integrable: power type 2 smoothness (" + r.smoothness.diagnostic + ")",
                                  r.smoothness.regime == Regime::power_2, r.smoothness.p_fit, 2.0));
    return r;
}

WeightedTailResult weighted_tail_check(const WeightedTree& tree, WeightPtr f, const std::vector<double>& t_grid,
                                       const SamplerConfig& sampler) {
    WeightedTailResult r;
    const auto X = weighted_span(tree, f);
    r.g_curve = index_curve(X, IndexKind::G, t_grid, sampler);
    double t0 = 0.0;
    if (f->kind() == AnalyticWeight::Kind::log_singular) {
        const double x0 = inverse_by_bisection(*f, 1.0);
        t0 = f->value(x0 * x0 / std::exp(1.0));
    }
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        const double wt = tail_integral(*f, t);
        r.weight_tail.push_back(wt);
        // The f r_{n_1} vector is in the pool exactly, so only rounding in the
        // cell integrals separates the two.
        r.checks.push_back(check_ge(at("G_Ef_ge_tail_f", t), kAnchorInherit, r.g_curve.estimates[i], wt,
                                    1e-12 * std::max(1.0, wt)));
        if (f->kind() == AnalyticWeight::Kind::log_singular && t > t0) {
            const double b = 1.0 / (4.0 * std::log(4.0 * t));
            r.bound.push_back(b);
            r.checks.push_back(check_ge(at("G_Ef_ge_log_bound", t), kAnchorTail, r.g_curve.estimates[i], b));
        } else {
            r.bound.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    r.smoothness = classify_smoothness(r.g_curve);
    if (f->kind() == AnalyticWeight::Kind::log_singular) {
        r.checks.push_back(check_true("E_f_regime_none",
                                      "G_{E_f}(t) >= 1/(4 log 4t) is not integrable: no power-type bound (" +
                                          r.smoothness.diagnostic + ")",
                                      r.smoothness.regime == Regime::none &&
                                          r.smoothness.diagnostic.rfind("sub-polynomial", 0) == 0,
                                      r.smoothness.fit_quality, 0.0));
    }
    return r;
}

}  // namespace renorm
