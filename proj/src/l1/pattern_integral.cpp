#include "renorm/l1/pattern_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "renorm/core/quadrature.hpp"

namespace renorm {

Jet SquaredWeightIntegrand::jet(double x, double scale) const {
    const Jet w = w_.jet(x, scale);
    return w * w;
}

double SquaredWeightIntegrand::interval(double a, double b) const {
    if (!(b > a)) return 0.0;
    auto f = [this](double x) {
        const double v = w_.value(x);
        return v * v;
    };
    return integrate_adaptive(f, a, b, 1e-300, rel_tol_).value;
}

Jet LogModularIntegrand::jet(double x, double scale) const {
    return log(w_.jet(x, scale) * s_ + 1.0) + (-std::numbers::ln2);
}

double LogModularIntegrand::interval(double a, double b) const {
    if (!(b > a)) return 0.0;
    auto f = [this](double x) { return std::log(0.5 * (1.0 + s_ * w_.value(x))); };
    return integrate_adaptive(f, a, b, 1e-300, rel_tol_).value;
}

namespace {

double floor_to(double x, int k) { return std::ldexp(std::floor(std::ldexp(x, k)), -k); }

double endpoint_block(const Integrand& g, std::span<const DigitConstraint> cs, double u, double v) {
    const int p1 = cs.front().position;
    const double delta = std::ldexp(1.0, -p1);
    const Jet var = Jet::variable(0.0, 1.0);
    Jet h = Jet::constant(1.0);
    for (const auto& c : cs) {
        const double rho = std::ldexp(0.5, p1 - c.position);
        const double sigma = c.bit ? 1.0 : -1.0;
        h = h * (tanh(var * rho) * sigma + 1.0);
    }
    const Jet ju = g.jet(u, delta);
    const Jet jv = g.jet(v, delta);
    double corr = 0.0;
    double fact = 1.0;  // (k-1)!
    for (std::size_t k = 1; k <= kJetOrder; ++k) {
        corr += h[k] * fact * (jv[k - 1] - ju[k - 1]);
        fact *= static_cast<double>(k);
    }
    return std::ldexp(g.interval(u, v) + delta * corr, -static_cast<int>(cs.size()));
}

}  // namespace

double integrate_pattern(const Integrand& g, std::span<const DigitConstraint> cs, double a, double b) {
    if (!(b > a)) return 0.0;
    if (cs.empty()) return g.interval(a, b);
    const int p1 = cs.front().position;
    const int k = p1 - 1;  // period P = 2^-k
    const double period = std::ldexp(1.0, -k);
    if (a >= std::ldexp(period, kFarPeriodsLog2)) return std::ldexp(g.interval(a, b), -static_cast<int>(cs.size()));
    const double half = 0.5 * period;
    const double chosen = cs.front().bit ? half : 0.0;
    const auto rest = cs.subspan(1);

    auto one_period = [&](double q, double lo, double hi) {
        const double s = q + chosen;
        return integrate_pattern(g, rest, std::max(lo, s), std::min(hi, s + half));
    };

    const double qa = floor_to(a, k);
    const double a_al = qa == a ? a : qa + period;
    const double b_al = floor_to(b, k);
    if (a_al >= b_al) {
        // Inside one period or straddling one boundary; no exact arithmetic
        // issue since a is then not a multiple of P, so qa is small relative
        // to 2^53 P.
        double total = one_period(qa, a, b);
        if (qa + period < b) total += one_period(qa + period, a, b);
        return total;
    }
    double total = 0.0;
    if (a < a_al) total += one_period(qa, a, a_al);
    if (b_al < b) total += one_period(b_al, b_al, b);
    const double near_end = std::min(b_al, std::ldexp(static_cast<double>(kNearPeriods), -k));
    double q = a_al;
    for (; q < near_end; q += period) total += one_period(q, q, q + period);
    if (q < b_al) total += endpoint_block(g, cs, q, b_al);
    return total;
}

double integrate_set(const Integrand& g, const DyadicSet& set, double a, double b) {
    double total = 0.0;
    for (const auto& run : set.base_runs()) {
        const double lo = std::max(a, run.lo);
        const double hi = std::min(b, run.hi);
        if (hi > lo) total += integrate_pattern(g, set.constraints(), lo, hi);
    }
    return total;
}

}  // namespace renorm
