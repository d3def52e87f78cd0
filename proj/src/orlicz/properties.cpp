#include "renorm/orlicz/properties.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "renorm/core/parallel.hpp"
#include "renorm/core/random.hpp"
#include "renorm/l1/cell_model.hpp"
#include "renorm/l1/step_function.hpp"
#include "renorm/orlicz/orlicz.hpp"
#include "renorm/report/format.hpp"

namespace renorm {

namespace {

constexpr std::uint64_t kTagLemmaPairs = 0x4c50ULL;
constexpr std::uint64_t kTagPointwise = 0x5057ULL;
constexpr std::uint64_t kTagRemark = 0x524dULL;
constexpr std::uint64_t kTagSolver = 0x534fULL;
constexpr std::size_t kBlock = 4096;

// Rounding allowance for relations that hold with equality on part of the
// domain (e.g. both sides equal t^2 on [0,1]).
constexpr double kUlpSlack = 64.0 * std::numeric_limits<double>::epsilon();

struct Tally {
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    double a = 0.0, b = 0.0;

    /// Records big >= small with slack relative to the magnitudes involved.
    void add(double big, double small, double scale, double x, double y) {
        ++samples;
        const double margin = (big - small) / std::max(scale, std::numeric_limits<double>::min());
        if (big < small - kUlpSlack * scale) ++violations;
        if (margin < worst) worst = margin, a = x, b = y;
    }
    void merge(const Tally& o) {
        samples += o.samples;
        violations += o.violations;
        if (o.worst < worst) worst = o.worst, a = o.a, b = o.b;
    }
};

InequalityStats finish(std::string name, std::string anchor, const Tally& t) {
    InequalityStats s;
    s.name = name;
    s.samples = t.samples;
    s.violations = t.violations;
    s.worst_margin = t.worst;
    s.worst_a = t.a;
    s.worst_b = t.b;
    s.check = check_le(std::move(name) + ".violations", std::move(anchor), static_cast<double>(t.violations), 0.0);
    return s;
}

/// Runs body(rng, tally...) over `n` samples in fixed blocks, each block with
/// its own stream, and merges in block order.
template <std::size_t N, class Body>
std::array<Tally, N> sampled(std::size_t n, std::uint64_t seed, std::uint64_t tag, Body&& body) {
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    auto parts = parallel_map<std::array<Tally, N>>(blocks, [&](std::size_t blk) {
        std::array<Tally, N> t{};
        Rng rng(stream_seed(seed, tag, blk));
        const std::size_t end = std::min(n, (blk + 1) * kBlock);
        for (std::size_t i = blk * kBlock; i < end; ++i) body(rng, t);
        return t;
    });
    std::array<Tally, N> total{};
    for (const auto& p : parts) {
        for (std::size_t k = 0; k < N; ++k) total[k].merge(p[k]);
    }
    return total;
}

void lemma_pair(double a, double b, std::array<Tally, 2>& t) {
    const double c = std::max(std::abs(a), std::abs(b));
    const double d = midpoint_defect(a, b);
    const double left = 0.25 * phi(c) * (a - b) * (a - b);
    const double right = 16.0 * orlicz_value(0.5 * (a - b));
    t[0].add(d, left, std::max(d, left), a, b);
    t[1].add(right, d, std::max(d, right), a, b);
}

}  // namespace

ClosedFormResult closed_form_vs_quadrature(std::size_t points, double t_max) {
    auto errs = parallel_map<double>(points, [&](std::size_t i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
        const double m = orlicz_value(t);
        return std::abs(m - orlicz_M_quadrature(t)) / std::max(1.0, m);
    });
    ClosedFormResult r;
    r.points = points;
    for (std::size_t i = 0; i < points; ++i) {
        if (errs[i] > r.max_rel_error) {
            r.max_rel_error = errs[i];
            r.worst_t = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
        }
    }
    r.check = check_le("closed_form_vs_quadrature.max_rel_error",
                       "M as second primitive of phi: closed form equals int_0^|t| phi(u)(|t|-u) du",
                       r.max_rel_error, 1e-10);
    return r;
}

std::vector<InequalityStats> lemma_two_sided(std::size_t pairs, std::uint64_t seed, double range) {
    auto t = sampled<2>(pairs, seed, kTagLemmaPairs, [&](Rng& rng, std::array<Tally, 2>& tl) {
        lemma_pair(rng.uniform(-range, range), rng.uniform(-range, range), tl);
    });
    std::array<Tally, 2> edge{};
    lemma_pair(1.0, -1.0, edge);
    lemma_pair(-1.0, 1.0, edge);
    for (int i = 0; i <= 900; ++i) {
        const double s = std::pow(10.0, -6.0 + 9.0 * i / 900.0);
        for (double v : {s, -s}) {
            lemma_pair(v, 0.5 * v, edge);
            lemma_pair(v, -v, edge);
        }
    }
    t[0].merge(edge[0]);
    t[1].merge(edge[1]);
    return {finish("lemma_left", "lower bound: M''(c)(a-b)^2/4 <= M(a)+M(b)-2M((a+b)/2), c = max(|a|,|b|)", t[0]),
            finish("lemma_right", "upper bound: M(a)+M(b)-2M((a+b)/2) <= 16 M((a-b)/2)", t[1])};
}

std::vector<InequalityStats> pointwise_inequalities(std::size_t samples, std::uint64_t seed) {
    // Half the draws log-uniform on [1e-6, 1e3] to cover the quadratic piece
    // and the kink at 1, half uniform on [0, 1e3].
    auto draw_t = [](Rng& rng) {
        return rng.uniform() < 0.5 ? std::pow(10.0, rng.uniform(-6.0, 3.0)) : rng.uniform(0.0, 1e3);
    };
    auto t = sampled<4>(samples, seed, kTagPointwise, [&](Rng& rng, std::array<Tally, 4>& tl) {
        const double x = draw_t(rng);
        const double alpha = std::pow(10.0, rng.uniform(0.0, 3.0));
        const double m = orlicz_value(x);
        const double ma = orlicz_value(alpha * x);
        tl[0].add(alpha * alpha * m, ma, std::max(alpha * alpha * m, ma), x, alpha);
        const double m2 = orlicz_value(2.0 * x);
        tl[1].add(4.0 * m, m2, 4.0 * m, x, 2.0);
        const double third = x * x * phi(x) / 3.0;
        tl[2].add(m, third, m, x, 0.0);
        const double y = rng.uniform() < 0.5 ? -x : x;
        tl[3].add(6.0 * std::abs(y), orlicz_value(y), 6.0 * std::abs(y), y, 0.0);
    });
    return {finish("scaling", "alpha^2 M(t) >= M(alpha t) for alpha >= 1", t[0]),
            finish("delta2", "Delta_2 condition: 4 M(t) >= M(2t)", t[1]),
            finish("second_derivative", "M(t) >= t^2 M''(t) / 3", t[2]),
            finish("linear_growth", "M(t) <= C |t| with C = 6", t[3])};
}

std::vector<Check> remark_power_bounds(std::size_t samples, std::uint64_t seed) {
    std::vector<Check> out;
    for (double p : {1.25, 1.5, 2.0}) {
        const auto pb = power_bound(p);
        const std::string tag = "remark_p" + format_short(p);
        out.push_back(check_true(tag + ".interior_max", "M(u) <= c_p |u|^p: sup attained inside the grid",
                                 pb.interior && std::isfinite(pb.c_p), pb.c_p, pb.argmax));
        Rng rng(stream_seed(seed, kTagRemark, static_cast<std::uint64_t>(p * 1000)));
        std::size_t bad = 0;
        for (std::size_t i = 0; i < samples; ++i) {
            const double u = std::pow(10.0, rng.uniform(-6.0, 8.0));
            const double bound = pb.c_p * std::pow(u, p);
            if (orlicz_value(u) > bound * (1.0 + 1e-12)) ++bad;
        }
        out.push_back(check_le(tag + ".fresh_violations", "M(u) <= c_p |u|^p rechecked on fresh random u",
                               static_cast<double>(bad), 0.0));
    }
    return out;
}

std::vector<Check> constant_checks() {
    const auto& c = norm_equivalence_constants();
    const char* derived = "derived, not quoted: sup M(t)/t = lim M'(t) = 6";
    return {check_true("constants.certified", derived, c.certified, c.max_ratio, 6.0),
            check_close("constants.k", "k ||f|| <= ||f||_1 <= ||f|| with k = 1/6 (derived)", c.k, 1.0 / 6.0, 0.0),
            check_close("constants.C", "M(x) <= C|x| with C = 6 (derived)", c.C, 6.0, 0.0),
            check_close("constants.K1", "K1 = (k/18)^2", c.K1, 1.0 / (108.0 * 108.0), 1e-20),
            check_close("constants.K2", "K2 = 2K, K = 128 C", c.K2, 1536.0, 0.0)};
}

std::vector<Check> example_value_checks() {
    const char* phi_anchor = "phi = 2 on [0,1], 8/(1+t)^2 beyond";
    const char* m_anchor = "M(t) = t^2 on [-1,1]; M(1) = 1";
    return {check_close("phi(0.5)", phi_anchor, phi(0.5), 2.0, 0.0),
            check_close("phi(1)", phi_anchor, phi(1.0), 2.0, 0.0),
            check_close("phi(3)", phi_anchor, phi(3.0), 0.5, 0.0),
            check_close("M(0.5)", m_anchor, orlicz_value(0.5), 0.25, 0.0),
            check_close("M(1)", m_anchor, orlicz_value(1.0), 1.0, 0.0),
            check_close("M(2)", "M(2) = 7 - 8 ln 1.5 (derived)", orlicz_value(2.0), 7.0 - 8.0 * std::log(1.5), 1e-15),
            check_close("M(2)_quadrature", "M(2) by quadrature of the defining integral", orlicz_M_quadrature(2.0),
                        orlicz_value(2.0), 1e-12),
            check_close("M'(1)", "continuity at 1: M'(1) = 2", orlicz_derivative(1.0), 2.0, 0.0),
            check_close("sharpness", "left bound is tight at a = 1, b = -1: M''(1)(a-b)^2/4 = 2",
                        midpoint_defect(1.0, -1.0), 0.25 * phi(1.0) * 4.0, 0.0),
            check_close("modular(2chi,1)", "int M(f/lambda) for f = 2 chi_[0,1/2), lambda = 1: M(2)/2",
                        modular(StepFunction(1, {2.0, 0.0}), 1.0), 0.5 * orlicz_value(2.0), 1e-15)};
}

double two_chi_norm_oracle() {
    double lo = 1.0, hi = 6.0;  // [||f||_1, 6 ||f||_1]
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) return mid;
        (0.5 * orlicz_M_quadrature(2.0 / mid) > 1.0 ? lo : hi) = mid;
    }
}

SolverStats luxemburg_solver_checks(std::size_t count, int level, std::uint64_t seed, double tolerance) {
    const double k = norm_equivalence_constants().k;
    struct Row {
        double residual, l1, lambda;
    };
    const StepModel model(level);
    auto rows = parallel_map<Row>(count, [&](std::size_t i) {
        Rng rng(stream_seed(seed, kTagSolver, i));
        // Scale over six decades; a random fraction of cells set to zero so
        // that sparse and spread-out functions both occur.
        const double scale = std::pow(10.0, rng.uniform(-3.0, 3.0));
        const double zero_fraction = rng.uniform();
        std::vector<double> v(model.cell_count());
        for (double& x : v) x = rng.uniform() < zero_fraction ? 0.0 : scale * rng.normal();
        if (model.l1(v) == 0.0) v[0] = scale;
        const auto sol = luxemburg_norm(model, v, tolerance);
        return Row{std::abs(sol.modular_at_lambda - 1.0), model.l1(v), sol.lambda};
    });
    SolverStats s;
    s.functions = count;
    for (const auto& r : rows) {
        s.max_residual = std::max(s.max_residual, r.residual);
        const bool ok = k * r.lambda <= r.l1 * (1.0 + 1e-12) && r.l1 <= r.lambda * (1.0 + 1e-12);
        if (!ok) ++s.sandwich_violations;
    }
    s.norm_of_one = luxemburg_norm(StepFunction::constant(1.0), tolerance).lambda;
    s.norm_two_chi = luxemburg_norm(StepFunction(1, {2.0, 0.0}), tolerance).lambda;
    s.oracle_two_chi = two_chi_norm_oracle();
    s.checks = {
        check_le("solver.max_residual", "||f|| = inf{lambda : int M(f/lambda) <= 1}, modular = 1 at the norm",
                 s.max_residual, tolerance),
        check_le("solver.sandwich_violations", "k ||f|| <= ||f||_1 <= ||f||",
                 static_cast<double>(s.sandwich_violations), 0.0),
        check_close("solver.norm_of_one", "||1|| = 1 since M(1) = 1", s.norm_of_one, 1.0, 0.0),
        check_close("solver.two_chi", "||2 chi_[0,1/2)|| solves M(2/lambda) = 2", s.norm_two_chi, s.oracle_two_chi,
                    1e-8),
    };
    return s;
}

}  // namespace renorm
