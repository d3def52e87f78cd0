#include "renorm/subspace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renorm/core/parallel.hpp"
#include "renorm/orlicz/orlicz.hpp"
#include "renorm/report/format.hpp"

namespace renorm {

namespace {

const char* kAnchorA = "modulus of convexity lower bound: delta_X(eps) >= K_X eps^2, K_X = K1 sup t^2 C_X(t)^3";
const char* kAnchorB = "modulus of smoothness upper bound: rho_X(tau) <= K2 tau^2 int_0^{1/tau} G_X(t) dt";
const char* kAnchorFigiel = "Figiel: rho_X(tau) <= 16 sup over orthogonal unit pairs of the smoothness quotient";
const char* kAnchorPointwise =
    "integrated two-sided inequality: ||f+tau g|| + ||f-tau g|| - 2 <= 16 int M(tau g) for f orthogonal to g";
const char* kAnchorLemma = "uniform convexity lemma: 1-||u|| >= (k/9)^2 t^2 mu(|v| > t||v||_1)^3 ||v||^2";

std::string tag(const char* what, double arg) { return std::string(what) + "[" + format_short(arg) + "]"; }

double slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t lo, std::size_t hi) {
    const double n = static_cast<double>(hi - lo);
    double mx = 0, my = 0;
    for (std::size_t i = lo; i < hi; ++i) mx += x[i], my += y[i];
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace

VerifyAResult verify_A(const Subspace& X, const std::vector<double>& eps_grid, const std::vector<double>& t_grid,
                       const SamplerConfig& sampler, std::size_t pair_count) {
    VerifyAResult r;
    r.subspace = X.label();
    r.kx = K_X_constant(X, t_grid, sampler);
    r.vacuous = !(r.kx.value > 0.0);
    r.delta = delta_curve(X, eps_grid, pair_count, sampler.seed);
    r.delta.constants.K_X = r.kx.value;
    r.checks.push_back(check_ge("K_X.positive", kAnchorA, r.kx.value, 0.0));
    if (r.vacuous) {
        r.checks.back() = check_true("K_X.vacuous", std::string(kAnchorA) + " (bound vacuous: C_X ~ 0 on grid)",
                                     true, r.kx.value, 0.0);
    }
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        const double e = eps_grid[i];
        const double b = r.kx.value * e * e;
        r.bound.push_back(b);
        r.checks.push_back(check_ge(tag("delta_ge_KX_eps2", e), kAnchorA, r.delta.estimates[i], b));
        r.checks.push_back(check_le(tag("delta_le_1", e), "delta_X(eps) <= 1", r.delta.estimates[i], 1.0, 1e-12));
    }
    return r;
}

std::vector<double> b_integration_grid(const std::vector<double>& tau_grid, int log_points) {
    double top = 1.0;
    for (double tau : tau_grid) top = std::max(top, 1.0 / tau);
    std::vector<double> g{0.0, 1.0};
    const double a = std::log(1e-3), b = std::log(top);
    for (int i = 0; i < log_points; ++i) g.push_back(std::exp(a + (b - a) * i / (log_points - 1)));
    for (double tau : tau_grid) g.push_back(1.0 / tau);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<double> upper_envelope(const std::vector<double>& values) {
    std::vector<double> e(values);
    for (std::size_t i = e.size(); i-- > 1;) e[i - 1] = std::max(e[i - 1], e[i]);
    return e;
}

double envelope_integral(const std::vector<double>& t, const std::vector<double>& e, double upper) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < t.size() && t[i + 1] <= upper; ++i) s += 0.5 * (e[i] + e[i + 1]) * (t[i + 1] - t[i]);
    return s;
}

VerifyBResult verify_B(const Subspace& X, const std::vector<double>& tau_grid, const SamplerConfig& sampler,
                       std::size_t pair_count, int log_points) {
    VerifyBResult r;
    r.subspace = X.label();
    const double K2 = norm_equivalence_constants().K2;
    const auto grid = b_integration_grid(tau_grid, log_points);
    r.g_curve = index_curve(X, IndexKind::G, grid, sampler);
    r.envelope = upper_envelope(r.g_curve.estimates);
    r.rho = rho_curve(X, tau_grid, pair_count, sampler.seed);
    r.figiel = rho_figiel_curve(X, tau_grid, pair_count, sampler.seed);
    const bool have_orthogonal = !r.figiel.accepted.empty() && r.figiel.accepted[0] > 0;
    if (have_orthogonal) {
        r.checks.push_back(check_le("figiel.orthogonality_residual", "support functional vanishes on y: x*(y) = 0",
                                    r.figiel.max_residual, kOrthogonalityTolerance));
    } else {
        r.checks.push_back(check_true("figiel.no_orthogonal_pairs",
                                      "one-dimensional space: no orthogonal unit pairs, Figiel side not evaluated",
                                      X.dim() == 1));
    }
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        const double tau = tau_grid[i];
        const double I = envelope_integral(grid, r.envelope, 1.0 / tau);
        const double B = K2 * tau * tau * I;
        r.integral.push_back(I);
        r.bound.push_back(B);
        r.checks.push_back(check_le(tag("rho_le_B", tau), kAnchorB, r.rho.estimates[i], B));
        if (have_orthogonal) {
            r.checks.push_back(
                check_le(tag("rho_le_16_figiel", tau), kAnchorFigiel, r.rho.estimates[i], 16.0 * r.figiel.estimates[i]));
            r.checks.push_back(check_le(tag("figiel_modular_gap", tau), kAnchorPointwise, r.figiel.max_modular_gap[i],
                                        0.0, 1e-9));
        }
    }
    r.rho.constants.K_X = 0.0;
    return r;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::power_2: return "power_2";
        case Regime::power_p: return "power_p";
        case Regime::log_2: return "log_2";
        case Regime::none: return "none";
    }
    return "?";
}

SmoothnessClass classify_smoothness(const IndexCurve& g, const ClassifierOptions& opt) {
    SmoothnessClass c;
    for (std::size_t i = 0; i < g.t_grid.size(); ++i) {
        if (g.t_grid[i] > 0.0 && g.estimates[i] <= 0.0) {
            c.regime = Regime::power_2;
            c.p_fit = std::numeric_limits<double>::infinity();
            c.fit_quality = 1.0;
            c.integrable = true;
            c.diagnostic = "compactly supported: G vanishes from t = " + format_real(g.t_grid[i]);
            return c;
        }
    }
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < g.t_grid.size(); ++i) {
        if (g.t_grid[i] >= opt.t_fit_min && g.t_grid[i] > 0.0) {
            lx.push_back(std::log(g.t_grid[i]));
            ly.push_back(std::log(g.estimates[i]));
        }
    }
    if (lx.size() < 4) {
        c.diagnostic = "too few tail points to fit";
        return c;
    }
    const std::size_t n = lx.size(), h = n / 2;
    const double s = slope(lx, ly, 0, n);
    const double s1 = slope(lx, ly, 0, h);
    const double s2 = slope(lx, ly, h, n);
    const double scale = std::max(std::abs(s1), std::abs(s2));
    c.fit_quality = scale > 0.0 ? 1.0 - std::abs(s1 - s2) / scale : 1.0;
    c.p_fit = 1.0 - s;
    if (c.fit_quality < opt.quality_threshold) {
        if (s2 < s1) {
            c.regime = Regime::power_2;
            c.integrable = true;
            c.diagnostic = "super-polynomial decay: log-log slope steepens from " + format_real(s1) + " to " +
                           format_real(s2);
        } else {
            c.regime = Regime::none;
            c.integrable = false;
            c.diagnostic = "sub-polynomial decay: log-log slope flattens from " + format_real(s1) + " to " +
                           format_real(s2);
        }
        return c;
    }
    c.integrable = c.p_fit > 2.0;
    if (std::abs(c.p_fit - 2.0) <= opt.band) {
        c.regime = Regime::log_2;
        c.diagnostic = "G ~ 1/t: smoothness of power type 2 up to a logarithm";
    } else if (c.p_fit > 2.0) {
        c.regime = Regime::power_2;
        c.diagnostic = "G decays faster than 1/t";
    } else if (c.p_fit > 1.0) {
        c.regime = Regime::power_p;
        c.diagnostic = "G ~ t^(1-p) with 1 < p < 2";
    } else {
        c.regime = Regime::none;
        c.diagnostic = "G does not decay polynomially";
    }
    return c;
}

LemmaCheckResult convexity_lemma_check(const Subspace& X, const std::vector<double>& t_grid,
                                       std::size_t pair_count, std::uint64_t seed) {
    const double k = norm_equivalence_constants().k;
    const double c = (k / 9.0) * (k / 9.0);
    const std::size_t nt = t_grid.size();
    struct Row {
        std::vector<double> lhs, rhs;
    };
    auto rows = parallel_map<Row>(pair_count, [&](std::size_t i) {
        Rng rng(stream_seed(seed, kTagLemma, i));
        const auto x = random_unit(X, NormKind::luxemburg, rng);
        const auto y = random_unit(X, NormKind::luxemburg, rng);
        std::vector<double> u(x.size()), v(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) {
            u[j] = 0.5 * (x[j] + y[j]);
            v[j] = 0.5 * (x[j] - y[j]);
        }
        Row r;
        const double lhs = 1.0 - X.norm(u, NormKind::luxemburg, kModulusNormTolerance);
        const double vn = X.norm(v, NormKind::luxemburg, kModulusNormTolerance);
        auto vv = X.combine(v);
        const double v1 = X.model().l1(vv);
        for (double t : t_grid) {
            const double mu = v1 > 0.0 ? X.model().distribution(vv, t * v1) : 0.0;
            r.lhs.push_back(lhs);
            r.rhs.push_back(c * t * t * mu * mu * mu * vn * vn);
        }
        return r;
    });
    LemmaCheckResult out;
    out.t_grid = t_grid;
    for (std::size_t j = 0; j < nt; ++j) {
        double best = std::numeric_limits<double>::infinity(), l = 0, rr = 0;
        for (const auto& r : rows) {
            const double m = r.lhs[j] - r.rhs[j];
            if (m < best) best = m, l = r.lhs[j], rr = r.rhs[j];
        }
        out.min_margin.push_back(best);
        out.lhs_at_min.push_back(l);
        out.rhs_at_min.push_back(rr);
        // Slack covers the norm-solve tolerance on 1 - ||u||.
        out.checks.push_back(check_ge("lemma[" + X.label() + "]" + tag("", t_grid[j]), kAnchorLemma, l, rr, 1e-12));
    }
    return out;
}

}  // namespace renorm
