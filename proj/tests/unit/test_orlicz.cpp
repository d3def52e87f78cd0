#include <doctest.h>

#include <cmath>

#include "renorm/l1/cell_model.hpp"
#include "renorm/l1/step_function.hpp"
#include "renorm/orlicz/orlicz.hpp"
#include "renorm/orlicz/properties.hpp"

using namespace renorm;

TEST_CASE("phi and M spot values") {
    CHECK(phi(0.0) == 2.0);
    CHECK(phi(1.0) == 2.0);
    CHECK(phi(3.0) == doctest::Approx(0.5));
    CHECK(orlicz_value(0.5) == 0.25);
    CHECK(orlicz_value(1.0) == 1.0);
    CHECK(orlicz_value(3.0) == doctest::Approx(18.0 - 5.0 - 8.0 * std::log(2.0)));
    // C^1 across t = 1.
    CHECK(orlicz_derivative(1.0 + 1e-12) == doctest::Approx(2.0));
}

TEST_CASE("M' -> 6 and M(t) <= 6|t|") {
    CHECK(orlicz_derivative(1e9) == doctest::Approx(6.0));
    for (double t : {0.1, 1.0, 10.0, 1e6}) CHECK(orlicz_value(t) <= 6.0 * t);
}

TEST_CASE("norm-equivalence constants") {
    const auto& c = norm_equivalence_constants();
    CHECK(c.k == doctest::Approx(1.0 / 6.0));
    CHECK(c.C == doctest::Approx(6.0));
    CHECK(c.K1 == doctest::Approx(1.0 / (108.0 * 108.0)));
    CHECK(c.K2 == 1536.0);
}

TEST_CASE("midpoint defect sits between the two bounds") {
    for (auto [a, b] : {std::pair{0.0, 2.0}, {1.0, -1.0}, {5.0, 3.0}, {-100.0, 40.0}}) {
        const double d = midpoint_defect(a, b);
        const double half = std::abs(a - b) / 2.0;
        const double m = std::max(std::abs(a), std::abs(b));
        CHECK(d >= 0.25 * phi(m) * (a - b) * (a - b) - 1e-12);
        CHECK(d <= 16.0 * orlicz_value(half) + 1e-12);
    }
}

TEST_CASE("property drivers report zero violations on small runs") {
    CHECK(closed_form_vs_quadrature(500, 100.0).max_rel_error <= 1e-10);
    for (const auto& s : lemma_two_sided(20000, 3)) CHECK(s.violations == 0);
    for (const auto& s : pointwise_inequalities(20000, 3)) CHECK(s.violations == 0);
    CHECK(all_pass(remark_power_bounds(2000, 3)));
    CHECK(all_pass(constant_checks()));
    CHECK(all_pass(example_value_checks()));
}

TEST_CASE("Luxemburg norm examples") {
    CHECK(luxemburg_norm(StepFunction::constant(1.0)).lambda == 1.0);
    CHECK(luxemburg_norm(StepFunction::constant(0.0)).lambda == 0.0);
    const auto two_chi = luxemburg_norm(StepFunction::indicator(0.0, 0.5, 2.0), 0.0);
    CHECK(two_chi.lambda == doctest::Approx(1.4066268536).epsilon(1e-9));
    // Homogeneity and sign invariance.
    const StepFunction f(2, {1.0, -3.0, 0.5, 2.0});
    const StepFunction g(2, {-2.5, 7.5, -1.25, -5.0});
    CHECK(luxemburg_norm(g, 0.0).lambda == doctest::Approx(2.5 * luxemburg_norm(f, 0.0).lambda).epsilon(1e-13));
}

TEST_CASE("solver driver on random step functions") {
    const auto s = luxemburg_solver_checks(50, 10, 5);
    CHECK(s.max_residual <= 1e-10);
    CHECK(s.sandwich_violations == 0);
    CHECK(s.norm_of_one == 1.0);
    CHECK(all_pass(s.checks));
}
