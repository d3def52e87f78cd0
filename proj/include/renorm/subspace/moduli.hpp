#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "renorm/subspace/sampling.hpp"

namespace renorm {

class NonSmoothPoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Separation epsilon cannot be realized in X.
class UnreachableSeparation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Norm solves inside the moduli estimators run well below the default
/// tolerance: the quantities of interest are differences of norms.
inline constexpr double kModulusNormTolerance = 1e-13;
inline constexpr double kSeparationTolerance = 1e-9;
inline constexpr double kOrthogonalityTolerance = 1e-6;

enum class ModulusKind { delta, rho, rho_figiel };
std::string to_string(ModulusKind k);

struct ModulusConstants {
    double k = 0.0;
    double K1 = 0.0;
    double K2 = 0.0;
    double K_X = 0.0;
};

struct ModulusEstimate {
    ModulusKind modulus_kind = ModulusKind::delta;
    std::vector<double> argument_grid;
    /// delta: min over sampled pairs (>= true delta).
    /// rho, rho_figiel: max over sampled pairs (<= true value).
    std::vector<double> estimates;
    ModulusConstants constants;
    std::size_t pair_count = 0;
    std::uint64_t seed = 0;
    /// Pairs actually used per argument (Figiel rejects pairs whose
    /// orthogonality residual stays above tolerance).
    std::vector<std::size_t> accepted;
    /// rho_figiel only: worst orthogonality residual, and the largest value of
    /// ||f+tau g|| + ||f-tau g|| - 2 - 16 int M(tau g) over accepted pairs
    /// (must be <= 0).
    double max_residual = 0.0;
    std::vector<double> max_modular_gap;
};

std::string semantics(ModulusKind k);

/// Gateaux derivative of the Luxemburg norm at x (||x|| = 1) in direction y,
/// by a Richardson-extrapolated central difference.
double norm_derivative(const Subspace& X, std::span<const double> x, std::span<const double> y);

double delta_estimate(const Subspace& X, double epsilon, std::size_t pair_count, std::uint64_t seed);
double rho_estimate(const Subspace& X, double tau, std::size_t pair_count, std::uint64_t seed);
double rho_figiel_estimate(const Subspace& X, double tau, std::size_t pair_count, std::uint64_t seed);

ModulusEstimate delta_curve(const Subspace& X, const std::vector<double>& eps_grid, std::size_t pair_count,
                            std::uint64_t seed);
/// Pairs are drawn once and shared by every tau, so the curve is
/// nondecreasing in tau.
ModulusEstimate rho_curve(const Subspace& X, const std::vector<double>& tau_grid, std::size_t pair_count,
                          std::uint64_t seed);
/// Figiel pairs are orthogonalized copies of the rho pairs.
ModulusEstimate rho_figiel_curve(const Subspace& X, const std::vector<double>& tau_grid, std::size_t pair_count,
                                 std::uint64_t seed);

}  // namespace renorm
