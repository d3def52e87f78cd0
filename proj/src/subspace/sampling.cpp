#include "renorm/subspace/sampling.hpp"

#include <cmath>
#include <string>

#include "renorm/core/parallel.hpp"
#include "renorm/orlicz/orlicz.hpp"

namespace renorm {

bool normalize(const Subspace& X, std::vector<double>& a, NormKind kind, double tol) {
    const double n = X.norm(a, kind, tol);
    if (!(n > 0.0)) return false;
    for (double& x : a) x /= n;
    return true;
}

std::vector<double> random_unit(const Subspace& X, NormKind kind, Rng& rng) {
    std::vector<double> a(X.dim());
    do {
        for (double& x : a) x = rng.normal();
    } while (!normalize(X, a, kind));
    return a;
}

std::vector<std::vector<double>> sphere_sample(const Subspace& X, NormKind kind, std::uint64_t seed,
                                               std::size_t count) {
    if (count < 1) throw std::invalid_argument("sphere_sample: count must be >= 1");
    const double k = norm_equivalence_constants().k;
    return parallel_map<std::vector<double>>(count, [&](std::size_t i) {
        Rng rng(stream_seed(seed, kTagSphere, i));
        auto a = random_unit(X, kind, rng);
        if (kind == NormKind::luxemburg) {
            const double l1 = X.norm(a, NormKind::l1);
            if (!(k * (1.0 - 1e-9) <= l1 && l1 <= 1.0 + 1e-9)) {
                throw InvariantViolation("norm sandwich violated on sample " + std::to_string(i) + ": ||f||_1 = " +
                                         std::to_string(l1));
            }
        }
        return a;
    });
}

}  // namespace renorm
