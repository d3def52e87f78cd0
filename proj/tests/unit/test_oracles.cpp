// Oracles computed independently of the library code paths they check:
// plain trapezoid / bisection / exhaustive enumeration.
#include <doctest.h>

#include <cmath>
#include <vector>

#include "renorm/l1/cell_model.hpp"
#include "renorm/l1/step_function.hpp"
#include "renorm/l1/weight.hpp"
#include "renorm/orlicz/orlicz.hpp"
#include "renorm/orlicz/properties.hpp"
#include "renorm/subspace/indexes.hpp"
#include "renorm/subspace/subspace.hpp"

using namespace renorm;

namespace {

// M(t) = int_0^|t| int_0^s phi, by composite Simpson on a fine grid.
double M_simpson(double t) {
    const int n = 20000;
    const double h = t / n;
    auto Mprime = [](double s) { return s <= 1.0 ? 2.0 * s : 6.0 - 8.0 / (1.0 + s); };
    double acc = Mprime(0) + Mprime(t);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * Mprime(i * h);
    return acc * h / 3.0;
}

// Luxemburg norm of a step function by naive bisection on a wide bracket.
double norm_bisect(const std::vector<double>& v) {
    auto mod = [&](double lam) {
        double s = 0.0;
        for (double x : v) s += orlicz_value(x / lam);
        return s / static_cast<double>(v.size());
    };
    double lo = 1e-6, hi = 1e6;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        (mod(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("oracle: closed-form M against Simpson of M'") {
    for (double t : {0.0, 0.3, 1.0, 1.5, 2.0, 7.25, 40.0, 100.0}) {
        CHECK(orlicz_value(t) == doctest::Approx(M_simpson(t)).epsilon(1e-11));
        CHECK(orlicz_value(-t) == orlicz_value(t));
    }
}

TEST_CASE("oracle: Luxemburg norm of step functions against naive bisection") {
    const std::vector<std::vector<double>> fns{
        {1.0, 1.0}, {2.0, 0.0}, {3.0, -1.0, 0.5, 0.0}, {10.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}};
    for (const auto& v : fns) {
        const int level = static_cast<int>(std::log2(v.size()));
        const auto sol = luxemburg_norm(StepFunction(level, v), 0.0);
        CHECK(sol.lambda == doctest::Approx(norm_bisect(v)).epsilon(1e-12));
    }
}

TEST_CASE("oracle: 2 chi_[0,1/2) norm agrees with the quadrature-based oracle") {
    const double lib = luxemburg_norm(StepFunction::indicator(0.0, 0.5, 2.0), 0.0).lambda;
    CHECK(lib == doctest::Approx(two_chi_norm_oracle()).epsilon(1e-10));
    CHECK(lib == doctest::Approx(norm_bisect({2.0, 0.0})).epsilon(1e-12));
}

TEST_CASE("oracle: log weight integrals against trapezoid") {
    const auto w = log_weight();
    // int_0^1 f = 1 and int (f - t)^+ by a substitution-free fine sum away from 0.
    CHECK(w->integral(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    const double a = 0.2, b = 0.7;
    const int n = 200000;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = a + (b - a) * i / n;
        s += (i == 0 || i == n ? 0.5 : 1.0) * w->value(x);
    }
    s *= (b - a) / n;
    CHECK(w->integral(a, b) == doctest::Approx(s).epsilon(1e-9));
}

TEST_CASE("oracle: exhaustive 2-d parametrization of span{1, r1}") {
    // f = a + b r1 takes values u, v on the two halves; the L1 sphere is
    // |u| + |v| = 2. Both extremes sit at (u, v) = (2, 0).
    const int n = 4000;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double cmin = 1.0, gmax = 0.0;
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * M_PI * i / n;
            double u = std::cos(th), v = std::sin(th);
            const double s = std::abs(u) + std::abs(v);
            u = 2.0 * u / s;
            v = 2.0 * v / s;
            const double F = 0.5 * ((std::abs(u) > t) + (std::abs(v) > t));
            const double G = 0.5 * (std::max(std::abs(u) - t, 0.0) + std::max(std::abs(v) - t, 0.0));
            cmin = std::min(cmin, F);
            gmax = std::max(gmax, G);
        }
        CHECK(cmin == doctest::Approx(0.5));
        CHECK(gmax == doctest::Approx((2.0 - t) / 2.0).epsilon(1e-12));

        SamplerConfig sc;
        sc.sample_count = 2000;
        CHECK(c_index(const_rademacher_span(1), t, sc) == doctest::Approx(cmin).epsilon(1e-3));
        CHECK(g_index(const_rademacher_span(1), t, sc) == doctest::Approx(gmax).epsilon(1e-3));
    }
}
