#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renorm/report/check.hpp"

namespace renorm {

/// Counted outcome of a sampled inequality.
struct InequalityStats {
    std::string name;
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0;  // smallest (allowed side - tested side), scaled
    double worst_a = 0.0;
    double worst_b = 0.0;
    Check check;  // violations == 0
};

struct ClosedFormResult {
    std::size_t points = 0;
    double max_rel_error = 0.0;
    double worst_t = 0.0;
    Check check;
};

/// Closed-form M against quadrature of its defining integral on an even grid
/// of [0, t_max], error relative to max(1, M).
ClosedFormResult closed_form_vs_quadrature(std::size_t points = 10000, double t_max = 100.0);

/// 1/4 M''(max(|a|,|b|)) (a-b)^2 <= M(a)+M(b)-2M((a+b)/2) <= 16 M((a-b)/2)
/// for seeded pairs in [-range, range]^2 plus the boundary families
/// (+-1, -+1), (t, t/2), (t, -t). One stats record per side.
std::vector<InequalityStats> lemma_two_sided(std::size_t pairs, std::uint64_t seed, double range = 1e3);

/// alpha^2 M(t) >= M(alpha t) (alpha >= 1), 4 M(t) >= M(2t),
/// M(t) >= t^2 M''(t)/3 and M(t) <= 6|t|, each on `samples` seeded points.
std::vector<InequalityStats> pointwise_inequalities(std::size_t samples, std::uint64_t seed);

/// M(u) <= c_p |u|^p for p in {1.25, 1.5, 2}: interior maximizer, then a
/// fresh random recheck.
std::vector<Check> remark_power_bounds(std::size_t samples, std::uint64_t seed);

/// k, C, K1, K2 and the grid certification behind them.
std::vector<Check> constant_checks();

/// Spot values of phi and M and the modular of 2 chi_[0,1/2).
std::vector<Check> example_value_checks();

struct SolverStats {
    std::size_t functions = 0;
    double max_residual = 0.0;
    std::size_t sandwich_violations = 0;
    double norm_of_one = 0.0;
    double norm_two_chi = 0.0;
    double oracle_two_chi = 0.0;
    std::vector<Check> checks;
};

/// Luxemburg solver on `count` seeded random step functions of the given
/// level: modular residual, k||f|| <= ||f||_1 <= ||f||, ||1|| = 1 and the
/// 2 chi_[0,1/2) oracle.
SolverStats luxemburg_solver_checks(std::size_t count, int level, std::uint64_t seed,
                                    double tolerance = 1e-10);

/// Oracle for ||2 chi_[0,1/2)||: plain bisection of M(2/lambda) = 2 with M
/// from quadrature.
double two_chi_norm_oracle();

}  // namespace renorm
