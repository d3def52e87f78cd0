#pragma once

#include <string>
#include <vector>

#include "renorm/report/check.hpp"
#include "renorm/subspace/indexes.hpp"
#include "renorm/subspace/moduli.hpp"

namespace renorm {

struct VerifyAResult {
    std::string subspace;
    KXResult kx;
    ModulusEstimate delta;
    std::vector<double> bound;  // K_X eps^2
    bool vacuous = false;
    std::vector<Check> checks;
};

/// delta_estimate(eps) >= K_X eps^2 on every grid point. K_X comes from the
/// C-index curve on t_grid (inside (0,1)).
VerifyAResult verify_A(const Subspace& X, const std::vector<double>& eps_grid, const std::vector<double>& t_grid,
                       const SamplerConfig& sampler, std::size_t pair_count);

struct VerifyBResult {
    std::string subspace;
    IndexCurve g_curve;
    std::vector<double> envelope;  // nonincreasing upper envelope of g_curve
    std::vector<double> integral;  // int_0^{1/tau} G, per tau
    std::vector<double> bound;     // K2 tau^2 integral
    ModulusEstimate rho;
    ModulusEstimate figiel;
    std::vector<Check> checks;
};

/// Nodes for the G curve: 0, a log grid on [1e-3, max(1, 1/tau_min)], every
/// 1/tau and 1.
std::vector<double> b_integration_grid(const std::vector<double>& tau_grid, int log_points = 200);

/// Envelope E(t_i) = max_{j >= i} G(t_j).
std::vector<double> upper_envelope(const std::vector<double>& values);

/// Trapezoid of (t, e) over [0, upper]; upper must be a node.
double envelope_integral(const std::vector<double>& t, const std::vector<double>& e, double upper);

/// rho_estimate(tau) <= K2 tau^2 int_0^{1/tau} G, plus the Figiel-side
/// consistency checks on the same pairs.
VerifyBResult verify_B(const Subspace& X, const std::vector<double>& tau_grid, const SamplerConfig& sampler,
                       std::size_t pair_count, int log_points = 200);

enum class Regime { power_2, power_p, log_2, none };
std::string to_string(Regime r);

struct SmoothnessClass {
    Regime regime = Regime::none;
    double p_fit = 0.0;
    double fit_quality = 0.0;
    bool integrable = false;
    std::string diagnostic;
};

struct ClassifierOptions {
    /// Only points with t >= t_fit_min enter the tail fit.
    double t_fit_min = 1.0;
    double quality_threshold = 0.8;
    /// Half-width of the band around p = 2 read as the logarithmic case.
    double band = 0.1;
};

/// Reads the decay G(t) = O(t^{1-p}) off a log-log fit of the tail and maps
/// p to the smoothness regimes: p > 2 power 2, p = 2 power 2 up to a log,
/// 1 < p < 2 power p.
SmoothnessClass classify_smoothness(const IndexCurve& g_curve, const ClassifierOptions& options = {});

struct LemmaCheckResult {
    std::vector<double> t_grid;
    std::vector<double> min_margin;  // min over pairs of lhs - rhs
    std::vector<double> lhs_at_min;
    std::vector<double> rhs_at_min;
    std::vector<Check> checks;
};

/// 1 - ||u|| >= (k/9)^2 t^2 mu(|v| > t ||v||_1)^3 ||v||^2 for u = (x+y)/2,
/// v = (x-y)/2 with x, y on the Luxemburg sphere.
LemmaCheckResult convexity_lemma_check(const Subspace& X, const std::vector<double>& t_grid,
                                       std::size_t pair_count, std::uint64_t seed);

}  // namespace renorm
