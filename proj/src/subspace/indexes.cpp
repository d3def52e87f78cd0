#include "renorm/subspace/indexes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "renorm/core/parallel.hpp"
#include "renorm/orlicz/orlicz.hpp"

namespace renorm {

std::string to_string(IndexKind k) { return k == IndexKind::C ? "C" : "G"; }
std::string to_string(Direction d) {
    return d == Direction::upper_bound_of_inf ? "upper_bound_of_inf" : "lower_bound_of_sup";
}

namespace {

constexpr std::size_t kChunk = 256;

/// Objective oriented so that smaller is better for both indexes.
struct Scorer {
    const Subspace& X;
    IndexKind kind;

    double operator()(std::span<const double> a, double t) const {
        auto v = X.combine(a);
        const double l1 = X.model().l1(v);
        if (!(l1 > 0.0)) return std::numeric_limits<double>::infinity();
        for (double& x : v) x /= l1;
        return kind == IndexKind::C ? X.model().distribution(v, t) : -X.model().tail(v, t);
    }
    /// One pass over all t for a fixed candidate.
    void all(std::span<const double> a, const std::vector<double>& ts, std::span<double> out) const {
        auto v = X.combine(a);
        const double l1 = X.model().l1(v);
        for (double& x : v) x /= l1;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            out[i] = kind == IndexKind::C ? X.model().distribution(v, ts[i]) : -X.model().tail(v, ts[i]);
        }
    }
};

std::vector<std::vector<double>> sweep(std::size_t d, int n) {
    std::vector<std::vector<double>> out;
    if (d == 2) {
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * std::numbers::pi * i / n;
            out.push_back({std::cos(th), std::sin(th)});
        }
    } else if (d == 3) {
        const int m = n / 2;
        for (int j = 0; j <= m; ++j) {
            const double ph = std::numbers::pi * j / m;
            const int ring = (j == 0 || j == m) ? 1 : n;
            for (int i = 0; i < ring; ++i) {
                const double th = 2.0 * std::numbers::pi * i / n;
                out.push_back({std::sin(ph) * std::cos(th), std::sin(ph) * std::sin(th), std::cos(ph)});
            }
        }
    }
    return out;
}

std::vector<double> refine(const Scorer& score, std::vector<double> a, double t, int steps) {
    double best = score(a, t);
    double h = 0.0;
    for (double x : a) h = std::max(h, std::abs(x));
    h *= 0.5;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    std::vector<double> probe = a;
    auto eval = [&](std::size_t i, double s) {
        probe = a;
        probe[i] += s;
        return score(probe, t);
    };
    for (int step = 0; step < steps; ++step) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            double lo = -h, hi = h;
            double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
            double f1 = eval(i, x1), f2 = eval(i, x2);
            double best_s = 0.0, best_f = best;
            for (int it = 0; it < 24; ++it) {
                if (f1 < best_f) best_f = f1, best_s = x1;
                if (f2 < best_f) best_f = f2, best_s = x2;
                if (f1 <= f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - g * (hi - lo);
                    f1 = eval(i, x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + g * (hi - lo);
                    f2 = eval(i, x2);
                }
            }
            if (best_f < best) {
                best = best_f;
                a[i] += best_s;
            }
        }
        h *= 0.5;
    }
    return a;
}

}  // namespace

IndexCurve index_curve(const Subspace& X, IndexKind kind, const std::vector<double>& t_grid,
                       const SamplerConfig& sampler) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        if (kind == IndexKind::C && !(t > 0.0 && t < 1.0)) throw std::invalid_argument("C index needs t in (0,1)");
        if (kind == IndexKind::G && !(t >= 0.0)) throw std::invalid_argument("G index needs t >= 0");
    }
    const Scorer score{X, kind};
    const std::size_t d = X.dim();
    const std::size_t nt = t_grid.size();

    // Fixed candidates: signed unit basis vectors and the angular sweep.
    std::vector<std::vector<double>> fixed;
    for (std::size_t i = 0; i < d; ++i) {
        for (double s : {1.0, -1.0}) {
            std::vector<double> e(d, 0.0);
            e[i] = s;
            fixed.push_back(std::move(e));
        }
    }
    IndexCurve curve;
    if (d == 2 || d == 3) {
        auto sw = sweep(d, sampler.grid_points);
        fixed.insert(fixed.end(), sw.begin(), sw.end());
        curve.grid_modulus = 2.0 * std::numbers::pi / sampler.grid_points;
    }
    const auto samples = sphere_sample(X, NormKind::l1, sampler.seed, sampler.sample_count);

    auto score_block = [&](const std::vector<std::vector<double>>& pts) {
        // Row-major scores, one row per candidate.
        std::vector<float> rows(pts.size() * nt);
        const std::size_t chunks = (pts.size() + kChunk - 1) / kChunk;
        auto best = parallel_map<std::vector<double>>(chunks, [&](std::size_t c) {
            std::vector<double> ext(nt, std::numeric_limits<double>::infinity());
            std::vector<double> tmp(nt);
            for (std::size_t i = c * kChunk; i < std::min(pts.size(), (c + 1) * kChunk); ++i) {
                score.all(pts[i], t_grid, tmp);
                for (std::size_t j = 0; j < nt; ++j) {
                    ext[j] = std::min(ext[j], tmp[j]);
                    rows[i * nt + j] = static_cast<float>(tmp[j]);
                }
            }
            return ext;
        });
        return std::make_pair(std::move(rows), std::move(best));
    };

    auto [fixed_rows, fixed_best] = score_block(fixed);
    auto [sample_rows, sample_best] = score_block(samples);

    // Refinement starts per t: best fixed candidate and best of each
    // power-of-two prefix of the samples.
    auto refined = parallel_map<std::vector<std::vector<double>>>(nt, [&](std::size_t j) {
        std::vector<std::size_t> fixed_starts{0};
        for (std::size_t i = 1; i < fixed.size(); ++i) {
            if (fixed_rows[i * nt + j] < fixed_rows[fixed_starts[0] * nt + j]) fixed_starts[0] = i;
        }
        std::vector<std::vector<double>> starts{fixed[fixed_starts[0]]};
        std::size_t best = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (sample_rows[i * nt + j] < sample_rows[best * nt + j]) best = i;
            if (((i + 1) & i) == 0) starts.push_back(samples[best]);  // i + 1 is a power of two
        }
        std::sort(starts.begin(), starts.end());
        starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
        std::vector<std::vector<double>> out;
        for (auto& s : starts) out.push_back(refine(score, s, t_grid[j], sampler.refinement_steps));
        return out;
    });
    std::vector<std::vector<double>> refined_flat;
    for (auto& r : refined) refined_flat.insert(refined_flat.end(), r.begin(), r.end());
    auto [refined_rows, refined_best] = score_block(refined_flat);

    curve.index_kind = kind;
    curve.t_grid = t_grid;
    curve.sampler = sampler;
    curve.direction = kind == IndexKind::C ? Direction::upper_bound_of_inf : Direction::lower_bound_of_sup;
    curve.pool_size = fixed.size() + samples.size() + refined_flat.size();
    curve.estimates.assign(nt, std::numeric_limits<double>::infinity());
    for (const auto* blocks : {&fixed_best, &sample_best, &refined_best}) {
        for (const auto& ext : *blocks) {
            for (std::size_t j = 0; j < nt; ++j) curve.estimates[j] = std::min(curve.estimates[j], ext[j]);
        }
    }
    for (std::size_t j = 0; j < nt; ++j) {
        if (kind == IndexKind::G) {
            curve.estimates[j] = -curve.estimates[j];
            if (curve.estimates[j] > 1.0 + 1e-12) {
                throw InvariantViolation("G index above 1 at t = " + std::to_string(t_grid[j]));
            }
        }
    }
    return curve;
}

double c_index(const Subspace& X, double t, const SamplerConfig& sampler) {
    return index_curve(X, IndexKind::C, {t}, sampler).estimates[0];
}

double g_index(const Subspace& X, double t, const SamplerConfig& sampler) {
    return index_curve(X, IndexKind::G, {t}, sampler).estimates[0];
}

KXResult K_X_constant(const Subspace& X, const std::vector<double>& t_grid, const SamplerConfig& sampler) {
    KXResult r;
    r.c_curve = index_curve(X, IndexKind::C, t_grid, sampler);
    const double K1 = norm_equivalence_constants().K1;
    double best = -1.0;
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
        const double c = r.c_curve.estimates[j];
        const double v = t_grid[j] * t_grid[j] * c * c * c;
        if (v > best) {
            best = v;
            r.argmax_t = t_grid[j];
            r.c_at_argmax = c;
        }
    }
    r.value = K1 * best;
    return r;
}

}  // namespace renorm
