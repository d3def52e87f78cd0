#include <doctest.h>

#include <cmath>
#include <vector>

#include "renorm/orlicz/orlicz.hpp"
#include "renorm/subspace/indexes.hpp"
#include "renorm/subspace/moduli.hpp"
#include "renorm/subspace/sampling.hpp"
#include "renorm/subspace/subspace.hpp"
#include "renorm/subspace/verify.hpp"

using namespace renorm;

namespace {

SamplerConfig small(std::size_t n = 1000) {
    SamplerConfig s;
    s.seed = 9;
    s.sample_count = n;
    return s;
}

}  // namespace

TEST_CASE("subspace construction and norms") {
    const auto X = rademacher_span(3);
    CHECK(X.dim() == 3);
    CHECK(X.label() == "rademacher:3");
    const std::vector<double> e1{1.0, 0.0, 0.0};
    CHECK(X.norm(e1, NormKind::l1) == 1.0);
    CHECK(X.norm(e1, NormKind::luxemburg) == 1.0);
    CHECK(X.gram_determinant() > 0.0);
    CHECK_THROWS_AS(step_span({rademacher(1), rademacher(1)}, "dup"), DegenerateBasis);
}

TEST_CASE("sphere samples are nested across counts and unit-normed") {
    const auto X = rademacher_span(4);
    const auto a = sphere_sample(X, NormKind::l1, 11, 50);
    const auto b = sphere_sample(X, NormKind::l1, 11, 200);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    for (const auto& v : b) CHECK(X.norm(v, NormKind::l1) == doctest::Approx(1.0).epsilon(1e-14));
    const auto lux = sphere_sample(X, NormKind::luxemburg, 11, 20);
    for (const auto& v : lux) CHECK(X.norm(v, NormKind::luxemburg, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("index curves are monotone and bounded") {
    const auto X = rademacher_span(3);
    const std::vector<double> grid{0.0, 0.25, 0.5, 1.0, 2.0, 3.0};
    const auto G = index_curve(X, IndexKind::G, grid, small());
    CHECK(G.estimates[0] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(G.estimates[i] <= G.estimates[i - 1]);
    const auto C = index_curve(X, IndexKind::C, {0.1, 0.5, 0.9}, small());
    for (double c : C.estimates) {
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
    CHECK(C.direction == Direction::upper_bound_of_inf);
}

TEST_CASE("span{1}: exact index values") {
    CHECK(c_index(constants_span(), 0.5, small()) == 1.0);
    CHECK(g_index(constants_span(), 0.25, small()) == doctest::Approx(0.75));
    CHECK(g_index(constants_span(), 1.5, small()) == 0.0);
}

TEST_CASE("norm derivative matches the modular-derivative oracle") {
    // At ||x|| = 1 the support functional is y -> int M'(x) y / int M'(x) x.
    const auto X = rademacher_span(2);
    std::vector<double> x{1.0, 0.4};
    normalize(X, x, NormKind::luxemburg, 0.0);
    const std::vector<double> y{-0.3, 1.0};
    const auto fx = X.combine(x), fy = X.combine(y);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        num += orlicz_derivative(fx[i]) * fy[i];
        den += orlicz_derivative(fx[i]) * fx[i];
    }
    CHECK(norm_derivative(X, x, y) == doctest::Approx(num / den).epsilon(1e-6));
}

TEST_CASE("modulus curves: delta sane, rho monotone in tau") {
    const auto X = rademacher_span(2);
    const auto d = delta_curve(X, {0.5, 1.0, 2.0}, 200, 4);
    for (double v : d.estimates) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    const auto r = rho_curve(X, {0.05, 0.1, 0.5, 1.0}, 200, 4);
    for (std::size_t i = 1; i < r.estimates.size(); ++i) CHECK(r.estimates[i] >= r.estimates[i - 1]);
    CHECK_THROWS_AS(delta_curve(X, {2.5}, 10, 1), std::invalid_argument);
}

TEST_CASE("verify_A / verify_B on a small span") {
    const auto X = rademacher_span(2);
    const auto a = verify_A(X, {0.5, 1.0, 2.0}, {0.25, 0.5, 0.75}, small(), 300);
    CHECK(a.kx.value > 0.0);
    CHECK(all_pass(a.checks));
    const auto b = verify_B(X, {0.1, 0.5, 1.0}, small(), 300);
    CHECK(all_pass(b.checks));
}

TEST_CASE("B bound for span{1} is 768 tau^2") {
    const auto b = verify_B(constants_span(), {0.1, 0.5, 1.0}, small(), 50);
    CHECK(b.bound[0] == doctest::Approx(7.68).epsilon(1e-2));
    CHECK(b.bound[2] == doctest::Approx(768.0).epsilon(1e-2));
}

TEST_CASE("upper envelope and trapezoid") {
    const auto e = upper_envelope({1.0, 0.5, 0.7, 0.1, 0.2});
    CHECK(e == std::vector<double>{1.0, 0.7, 0.7, 0.2, 0.2});
}

TEST_CASE("smoothness classifier") {
    IndexCurve c;
    c.index_kind = IndexKind::G;
    for (int i = 0; i <= 40; ++i) {
        const double t = std::pow(10.0, i / 10.0);
        c.t_grid.push_back(t);
        c.estimates.push_back(1.0 / (t * t * t));
    }
    auto s = classify_smoothness(c);
    CHECK(s.regime == Regime::power_2);
    for (std::size_t i = 0; i < c.t_grid.size(); ++i) c.estimates[i] = std::pow(c.t_grid[i], -0.5);
    s = classify_smoothness(c);
    CHECK(s.regime == Regime::power_p);
    CHECK(s.p_fit == doctest::Approx(1.5).epsilon(1e-6));
    for (std::size_t i = 0; i < c.t_grid.size(); ++i) c.estimates[i] = 1.0 / std::log(4.0 * c.t_grid[i] + 1.0);
    s = classify_smoothness(c);
    CHECK(s.regime == Regime::none);
}

TEST_CASE("convexity lemma holds on Rademacher pairs") {
    const auto r = convexity_lemma_check(rademacher_span(2), {0.1, 0.5, 1.5}, 300, 2);
    CHECK(all_pass(r.checks));
}
