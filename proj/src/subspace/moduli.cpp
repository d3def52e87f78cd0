#include "renorm/subspace/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "renorm/core/parallel.hpp"
#include "renorm/orlicz/orlicz.hpp"

namespace renorm {

std::string to_string(ModulusKind k) {
    switch (k) {
        case ModulusKind::delta: return "delta";
        case ModulusKind::rho: return "rho";
        case ModulusKind::rho_figiel: return "rho_figiel";
    }
    return "?";
}

std::string semantics(ModulusKind k) {
    return k == ModulusKind::delta ? "min over sampled pairs; upper bound of the true infimum"
                                   : "max over sampled pairs; lower bound of the true supremum";
}

namespace {

constexpr int kMaxResamples = 64;

double lux(const Subspace& X, std::span<const double> a, double tol = kModulusNormTolerance) {
    return X.norm(a, NormKind::luxemburg, tol);
}

std::vector<double> lincomb(std::span<const double> x, double a, std::span<const double> y) {
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
    return out;
}

ModulusConstants base_constants() {
    const auto nc = norm_equivalence_constants();
    return {nc.k, nc.K1, nc.K2, 0.0};
}

/// Point on the normalized path from x towards v at separation eps from x.
std::optional<std::vector<double>> reach(const Subspace& X, const std::vector<double>& x,
                                         const std::vector<double>& v, double eps) {
    const auto dir = lincomb(v, -1.0, x);
    std::vector<double> w;
    auto h = [&](double s) {
        w = lincomb(x, s, dir);
        if (!normalize(X, w, NormKind::luxemburg, kModulusNormTolerance)) return std::numeric_limits<double>::quiet_NaN();
        return lux(X, lincomb(x, -1.0, w)) - eps;
    };
    double lo = 0.0, hlo = -eps, hi = 0.0, hhi = 0.0;
    bool bracketed = false;
    for (double s : {1.0, 4.0, 16.0, 64.0, 1e3, 1e6}) {
        const double hs = h(s);
        if (std::isnan(hs)) return std::nullopt;
        if (hs >= 0.0) {
            hi = s;
            hhi = hs;
            bracketed = true;
            break;
        }
        lo = s;
        hlo = hs;
    }
    if (!bracketed) return std::nullopt;
    // Illinois-modified regula falsi; falls back to halving when the
    // interpolant stalls at one end.
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        double s = (lo * hhi - hi * hlo) / (hhi - hlo);
        if (!(s > lo && s < hi)) s = 0.5 * (lo + hi);
        const double hs = h(s);
        if (std::isnan(hs)) return std::nullopt;
        if (std::abs(hs) <= kSeparationTolerance) return w;
        if (hs < 0.0) {
            lo = s;
            hlo = hs;
            if (side == -1) hhi *= 0.5;
            side = -1;
        } else {
            hi = s;
            hhi = hs;
            if (side == 1) hlo *= 0.5;
            side = 1;
        }
        if (!(hi - lo > 0.0)) break;
    }
    return std::nullopt;
}

double delta_pair(const Subspace& X, double eps, std::uint64_t seed, std::size_t i) {
    Rng rng(stream_seed(seed, kTagDelta ^ argument_tag(eps), i));
    if (eps >= 2.0 - 1e-12) {
        const auto x = random_unit(X, NormKind::luxemburg, rng);
        std::vector<double> mid(x.size(), 0.0);
        return 1.0 - lux(X, mid);
    }
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        const auto x = random_unit(X, NormKind::luxemburg, rng);
        auto v = random_unit(X, NormKind::luxemburg, rng);
        for (int flip = 0; flip < 2; ++flip) {
            if (auto y = reach(X, x, v, eps)) {
                auto m = lincomb(x, 1.0, *y);
                for (double& c : m) c *= 0.5;
                return 1.0 - lux(X, m);
            }
            for (double& c : v) c = -c;
        }
    }
    throw UnreachableSeparation("delta: separation " + std::to_string(eps) + " not reached in '" + X.label() +
                                "' after " + std::to_string(kMaxResamples) + " resamples");
}

std::pair<std::vector<double>, std::vector<double>> rho_pair(const Subspace& X, std::uint64_t seed, std::size_t i) {
    Rng rng(stream_seed(seed, kTagRho, i));
    auto x = random_unit(X, NormKind::luxemburg, rng);
    auto y = random_unit(X, NormKind::luxemburg, rng);
    return {std::move(x), std::move(y)};
}

double rho_value(const Subspace& X, const std::vector<double>& x, const std::vector<double>& y, double tau) {
    return 0.5 * (lux(X, lincomb(x, tau, y)) + lux(X, lincomb(x, -tau, y))) - 1.0;
}

struct FigielPair {
    bool accepted = false;
    double residual = 0.0;
    std::vector<double> x, y;
};

FigielPair figiel_pair(const Subspace& X, std::uint64_t seed, std::size_t i) {
    auto [x, y0] = rho_pair(X, seed, i);
    FigielPair p;
    const double gamma = norm_derivative(X, x, y0);
    auto y = lincomb(y0, -gamma, x);
    if (!normalize(X, y, NormKind::luxemburg, kModulusNormTolerance)) return p;
    const double r = norm_derivative(X, x, y);
    y = lincomb(y, -r, x);
    if (!normalize(X, y, NormKind::luxemburg, kModulusNormTolerance)) return p;
    p.residual = std::abs(norm_derivative(X, x, y));
    p.accepted = p.residual <= kOrthogonalityTolerance;
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
}

void require_positive(const std::vector<double>& grid, const char* what) {
    for (double v : grid) {
        if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

}  // namespace

double norm_derivative(const Subspace& X, std::span<const double> x, std::span<const double> y) {
    auto quotient = [&](double h) {
        return (lux(X, lincomb(x, h, y), 0.0) - lux(X, lincomb(x, -h, y), 0.0)) / (2.0 * h);
    };
    const double h = 1e-6;
    const double d1 = quotient(h);
    const double d2 = quotient(0.5 * h);
    const double d = (4.0 * d2 - d1) / 3.0;
    if (std::abs(d1 - d2) > 1e-4 * std::max(1.0, std::abs(d))) {
        throw NonSmoothPoint("norm_derivative: difference quotients disagree (" + std::to_string(d1) + " vs " +
                             std::to_string(d2) + ")");
    }
    return d;
}

ModulusEstimate delta_curve(const Subspace& X, const std::vector<double>& eps_grid, std::size_t pair_count,
                            std::uint64_t seed) {
    if (pair_count < 1) throw std::invalid_argument("delta: pair_count must be >= 1");
    for (double e : eps_grid) {
        if (!(e > 0.0 && e <= 2.0)) throw std::invalid_argument("delta: epsilon must lie in (0, 2]");
        if (X.dim() == 1 && e < 2.0 - 1e-12) {
            throw UnreachableSeparation("delta: a one-dimensional space only admits epsilon = 2");
        }
    }
    ModulusEstimate out;
    out.modulus_kind = ModulusKind::delta;
    out.argument_grid = eps_grid;
    out.constants = base_constants();
    out.pair_count = pair_count;
    out.seed = seed;
    for (double e : eps_grid) {
        auto vals = parallel_map<double>(pair_count, [&](std::size_t i) { return delta_pair(X, e, seed, i); });
        out.estimates.push_back(tree_reduce(std::move(vals), std::numeric_limits<double>::infinity(),
                                            [](double a, double b) { return std::min(a, b); }));
        out.accepted.push_back(pair_count);
    }
    return out;
}

ModulusEstimate rho_curve(const Subspace& X, const std::vector<double>& tau_grid, std::size_t pair_count,
                          std::uint64_t seed) {
    if (pair_count < 1) throw std::invalid_argument("rho: pair_count must be >= 1");
    require_positive(tau_grid, "rho: tau");
    const std::size_t nt = tau_grid.size();
    auto rows = parallel_map<std::vector<double>>(pair_count, [&](std::size_t i) {
        const auto [x, y] = rho_pair(X, seed, i);
        std::vector<double> r(nt);
        for (std::size_t j = 0; j < nt; ++j) r[j] = rho_value(X, x, y, tau_grid[j]);
        return r;
    });
    ModulusEstimate out;
    out.modulus_kind = ModulusKind::rho;
    out.argument_grid = tau_grid;
    out.constants = base_constants();
    out.pair_count = pair_count;
    out.seed = seed;
    for (std::size_t j = 0; j < nt; ++j) {
        double m = 0.0;
        for (const auto& r : rows) m = std::max(m, r[j]);
        out.estimates.push_back(m);
        out.accepted.push_back(pair_count);
    }
    return out;
}

ModulusEstimate rho_figiel_curve(const Subspace& X, const std::vector<double>& tau_grid, std::size_t pair_count,
                                 std::uint64_t seed) {
    if (pair_count < 1) throw std::invalid_argument("rho_figiel: pair_count must be >= 1");
    require_positive(tau_grid, "rho_figiel: tau");
    const std::size_t nt = tau_grid.size();
    struct Row {
        bool accepted = false;
        double residual = 0.0;
        std::vector<double> value, gap;
    };
    auto rows = parallel_map<Row>(pair_count, [&](std::size_t i) {
        auto p = figiel_pair(X, seed, i);
        Row r;
        r.accepted = p.accepted;
        r.residual = p.residual;
        if (!p.accepted) return r;
        const auto gy = X.combine(p.y);
        for (double tau : tau_grid) {
            const double plus = lux(X, lincomb(p.x, tau, p.y));
            const double minus = lux(X, lincomb(p.x, -tau, p.y));
            r.value.push_back(0.5 * (plus + minus) - 1.0);
            r.gap.push_back(plus + minus - 2.0 - 16.0 * X.model().modular(gy, 1.0 / tau));
        }
        return r;
    });
    ModulusEstimate out;
    out.modulus_kind = ModulusKind::rho_figiel;
    out.argument_grid = tau_grid;
    out.constants = base_constants();
    out.pair_count = pair_count;
    out.seed = seed;
    out.estimates.assign(nt, 0.0);
    out.max_modular_gap.assign(nt, -std::numeric_limits<double>::infinity());
    std::size_t accepted = 0;
    for (const auto& r : rows) {
        if (!r.accepted) continue;
        ++accepted;
        out.max_residual = std::max(out.max_residual, r.residual);
        for (std::size_t j = 0; j < nt; ++j) {
            out.estimates[j] = std::max(out.estimates[j], r.value[j]);
            out.max_modular_gap[j] = std::max(out.max_modular_gap[j], r.gap[j]);
        }
    }
    out.accepted.assign(nt, accepted);
    return out;
}

double delta_estimate(const Subspace& X, double epsilon, std::size_t pair_count, std::uint64_t seed) {
    return delta_curve(X, {epsilon}, pair_count, seed).estimates[0];
}

double rho_estimate(const Subspace& X, double tau, std::size_t pair_count, std::uint64_t seed) {
    return rho_curve(X, {tau}, pair_count, seed).estimates[0];
}

double rho_figiel_estimate(const Subspace& X, double tau, std::size_t pair_count, std::uint64_t seed) {
    return rho_figiel_curve(X, {tau}, pair_count, seed).estimates[0];
}

}  // namespace renorm
