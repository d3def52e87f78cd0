#pragma once

#include <string>
#include <vector>

#include "renorm/subspace/sampling.hpp"

namespace renorm {

enum class IndexKind { C, G };
enum class Direction { upper_bound_of_inf, lower_bound_of_sup };

std::string to_string(IndexKind k);
std::string to_string(Direction d);

struct IndexCurve {
    IndexKind index_kind = IndexKind::C;
    std::vector<double> t_grid;
    std::vector<double> estimates;
    Direction direction = Direction::upper_bound_of_inf;
    SamplerConfig sampler;
    /// Angular spacing of the deterministic sweep (0 when no sweep ran).
    double grid_modulus = 0.0;
    std::size_t pool_size = 0;
};

/// Estimates C_X (inf of mu(|f| > t)) or G_X (sup of int (|f| - t)^+) over the
/// L^1 unit sphere on a t grid. Every t is scored against one common
/// candidate pool: signed unit basis vectors, the random samples, the angular
/// sweep for dim <= 3, and points refined by coordinate golden-section from
/// the best of each power-of-two prefix of the samples. Using one pool keeps
/// the curves monotone in t; using prefixes keeps them monotone in the sample
/// count.
IndexCurve index_curve(const Subspace& X, IndexKind kind, const std::vector<double>& t_grid,
                       const SamplerConfig& sampler);

double c_index(const Subspace& X, double t, const SamplerConfig& sampler);
double g_index(const Subspace& X, double t, const SamplerConfig& sampler);

struct KXResult {
    double value = 0.0;  // K_1 max_t t^2 C_X(t)^3
    double argmax_t = 0.0;
    double c_at_argmax = 0.0;
    IndexCurve c_curve;
};

KXResult K_X_constant(const Subspace& X, const std::vector<double>& t_grid, const SamplerConfig& sampler);

}  // namespace renorm
