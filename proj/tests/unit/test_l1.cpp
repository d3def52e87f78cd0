#include <doctest.h>

#include <cmath>
#include <sstream>

#include "renorm/l1/cell_model.hpp"
#include "renorm/l1/distribution_curve.hpp"
#include "renorm/l1/dyadic_set.hpp"
#include "renorm/l1/pattern_integral.hpp"
#include "renorm/l1/step_function.hpp"
#include "renorm/l1/weight.hpp"

using namespace renorm;

TEST_CASE("Rademacher functions") {
    const auto r2 = rademacher(2);
    CHECK(r2.level() == 2);
    CHECK(r2[0] == 1.0);
    CHECK(r2[1] == -1.0);
    CHECK(r2[2] == 1.0);
    CHECK(l1_norm(r2) == 1.0);
    CHECK(distribution(r2, 0.5) == 1.0);
    CHECK(distribution(r2, 1.0) == 0.0);
}

TEST_CASE("distribution and layer-cake tail of a step function") {
    const StepFunction f(2, {4.0, -2.0, 0.0, 1.0});
    CHECK(l1_norm(f) == doctest::Approx(7.0 / 4.0));
    CHECK(distribution(f, 1.5) == 0.5);
    CHECK(tail_integral(f, 1.0) == doctest::Approx((3.0 + 1.0) / 4.0));
    CHECK(tail_integral(f, 0.0) == doctest::Approx(l1_norm(f)));
    const auto curve = distribution_curve(as_cell_function(f), {0.0, 1.0, 3.0, 5.0});
    CHECK(curve.values == std::vector<double>{0.75, 0.5, 0.25, 0.0});
}

TEST_CASE("refinement and conditional expectation") {
    const StepFunction f(1, {2.0, -1.0});
    const auto g = f.refine(3);
    CHECK(g.size() == 8);
    CHECK(g.value_at(0.3) == 2.0);
    CHECK(conditional_expectation(g, 1) == f);
    CHECK(conditional_expectation(g, 0)[0] == doctest::Approx(0.5));
}

TEST_CASE("step CSV round trip") {
    const StepFunction f(2, {0.1, 1e-300, -3.0, 7.0 / 3.0});
    std::stringstream ss;
    write_csv(ss, f);
    CHECK(read_step_csv(ss) == f);
}

TEST_CASE("log weight: unit mass, inverses, tail") {
    const auto w = log_weight();
    CHECK(l1_norm(*w) == doctest::Approx(1.0).epsilon(1e-13));
    for (double t : {10.0, 100.0, 1e4}) {
        const double x = log_weight_inverse_decreasing(t);
        CHECK(w->value(x) == doctest::Approx(t).epsilon(1e-10));
        CHECK(distribution(*w, t) == doctest::Approx(x).epsilon(1e-9));
        CHECK(tail_integral(*w, t) > 0.0);
    }
}

TEST_CASE("dyadic sets: cells, digit constraints, masks") {
    const auto full = DyadicSet::full();
    CHECK(full.measure() == 1.0);
    const auto c = DyadicSet::cell(3, 5);
    CHECK(c.measure() == 0.125);
    const auto r = full.restrict(300, 1);
    CHECK(r.measure() == 0.5);
    CHECK(r.level() == 300);
    const auto a = DyadicSet::cell(2, 1).restrict(4, 0);
    CHECK(a.to_mask(4) == DyadicSet::from_cells(4, {0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(DyadicSet::cell(1, 0).mask_hex() == DyadicSet::from_cells(1, {1, 0}).mask_hex());
}

TEST_CASE("pattern integrals match plain integration") {
    const auto w = power_weight(0.5);
    // Digit-1 half of [0,1) at depth 3: union of 4 intervals.
    const auto set = DyadicSet::full().restrict(3, 1);
    CHECK(integrate_set(ConstantIntegrand(), set) == doctest::Approx(0.5));
    double direct = 0.0;
    for (int j = 0; j < 4; ++j) direct += w->integral(j * 0.25 + 0.125, j * 0.25 + 0.25);
    CHECK(integrate_set(WeightIntegrand(*w), set) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("weighted model norms are bounded by l1 sandwich") {
    const auto f = as_cell_function(log_weight());
    const double l1 = l1_norm(f);
    const double lux = luxemburg_norm(f).lambda;
    CHECK(l1 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lux >= l1);
    CHECK(lux <= 6.0 * l1);
}
