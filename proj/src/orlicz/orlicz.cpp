#include "renorm/orlicz/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "renorm/core/quadrature.hpp"

namespace renorm {

double orlicz_M_quadrature(double t, double rel_tol) {
    const double a = std::abs(t);
    if (a == 0.0) return 0.0;
    auto integrand = [a](double u) { return phi(u) * (a - u); };
    double total = integrate_or_throw(integrand, 0.0, std::min(a, 1.0), 0.0, rel_tol);
    if (a > 1.0) total += integrate_or_throw(integrand, 1.0, a, 0.0, rel_tol);
    return total;
}

double midpoint_defect(double a, double b) {
    const double m = 0.5 * (a + b);
    const double h = 0.5 * std::abs(a - b);
    if (h == 0.0) return 0.0;
    const double lo = m - h;
    const double hi = m + h;
    if (lo >= -1.0 && hi <= 1.0) return 2.0 * h * h;
    if (lo >= 1.0 || hi <= -1.0) {
        // Both points on the same logarithmic branch; the defect reduces to
        // 8 log((1+|m|)^2 / ((1+|a|)(1+|b|))) = 8 log1p(h^2 / ((1+|a|)(1+|b|))).
        return 8.0 * std::log1p(h * h / ((1.0 + std::abs(a)) * (1.0 + std::abs(b))));
    }
    // Second difference as a kernel integral: int phi(u) (h - |u - m|) du over
    // [m-h, m+h], split where phi or the kernel has a kink.
    std::vector<double> cuts{lo, hi, m};
    if (-1.0 > lo && -1.0 < hi) cuts.push_back(-1.0);
    if (1.0 > lo && 1.0 < hi) cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    auto kernel = [m, h](double u) { return phi(u) * (h - std::abs(u - m)); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) total += integrate_adaptive(kernel, cuts[i], cuts[i + 1], 0.0, 1e-14).value;
    }
    return total;
}

namespace {

NormConstants certify() {
    NormConstants c;
    c.K1 = (c.k / 18.0) * (c.k / 18.0);
    c.K2 = 2.0 * 128.0 * c.C;
    constexpr int kNodes = 200000;
    const double lmin = std::log(1e-6);
    const double lmax = std::log(1e3);
    bool ok = true;
    double prev_ratio = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const double t = std::exp(lmin + (lmax - lmin) * i / (kNodes - 1));
        const double value = orlicz_value(t);
        const double ratio = value / t;
        if (!(value <= c.C * t)) ok = false;
        // M(t)/t is nondecreasing (M convex, M(0) = 0); allow rounding noise.
        if (ratio < prev_ratio * (1.0 - 1e-14)) ok = false;
        prev_ratio = std::max(prev_ratio, ratio);
        c.max_ratio = std::max(c.max_ratio, ratio);
        c.grid_max_t = t;
    }
    // The supremum must be approached, not just bounded: at t = 1e3 the ratio
    // is 6 - (5 + 8 log 500.5)/1e3.
    ok = ok && c.max_ratio < c.C && c.max_ratio > 0.9 * c.C;
    c.certified = ok;
    return c;
}

}  // namespace

const NormConstants& norm_equivalence_constants() {
    static const NormConstants constants = certify();
    return constants;
}

PowerBound power_bound(double p) {
    PowerBound out;
    out.p = p;
    constexpr int kNodes = 4001;
    const double lmin = std::log(1e-4);
    const double lmax = std::log(1e8);
    auto ratio = [p](double logu) {
        const double u = std::exp(logu);
        return orlicz_value(u) / std::pow(u, p);
    };
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < kNodes; ++i) {
        const double v = ratio(lmin + (lmax - lmin) * i / (kNodes - 1));
        if (v >= best_val) {  // ties resolve to the largest u
            best_val = v;
            best = i;
        }
    }
    out.interior = best > 0 && best < kNodes - 1;
    double a = lmin + (lmax - lmin) * std::max(0, best - 1) / (kNodes - 1);
    double b = lmin + (lmax - lmin) * std::min(kNodes - 1, best + 1) / (kNodes - 1);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = ratio(x1), f2 = ratio(x2);
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = ratio(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = ratio(x1);
        }
    }
    const double refined = std::max(f1, f2);
    out.c_p = std::max(best_val, refined);
    out.argmax = std::exp(refined > best_val ? (f1 > f2 ? x1 : x2) : lmin + (lmax - lmin) * best / (kNodes - 1));
    return out;
}

}  // namespace renorm
