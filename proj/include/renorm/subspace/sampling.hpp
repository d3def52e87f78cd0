#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "renorm/core/random.hpp"
#include "renorm/subspace/subspace.hpp"

namespace renorm {

struct SamplerConfig {
    std::uint64_t seed = 1;
    std::size_t sample_count = 1000;
    int refinement_steps = 3;
    /// Points per angle of the deterministic sweep used when dim <= 3.
    int grid_points = 720;
};

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Stream tags for the independent random streams.
inline constexpr std::uint64_t kTagSphere = 0x5350484552ULL;
inline constexpr std::uint64_t kTagDelta = 0x44454c5441ULL;
inline constexpr std::uint64_t kTagRho = 0x52484fULL;
inline constexpr std::uint64_t kTagLemma = 0x4c454d4dULL;

/// Gaussian direction rescaled to the unit sphere of the requested norm.
std::vector<double> random_unit(const Subspace& X, NormKind kind, Rng& rng);

/// count coefficient vectors on the unit sphere; sample i depends only on
/// (seed, i), so a larger count extends a smaller one. Luxemburg samples are
/// checked against k ||f|| <= ||f||_1 <= ||f||.
std::vector<std::vector<double>> sphere_sample(const Subspace& X, NormKind kind, std::uint64_t seed,
                                               std::size_t count);

/// Rescales a to unit norm; returns false for the zero vector.
bool normalize(const Subspace& X, std::vector<double>& a, NormKind kind, double tol = kDefaultScalarTolerance);

}  // namespace renorm
