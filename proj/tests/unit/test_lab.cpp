#include <doctest.h>

#include <cmath>

#include "renorm/lab/tail_checks.hpp"
#include "renorm/lab/weighted_tree.hpp"
#include "renorm/subspace/verify.hpp"

using namespace renorm;

TEST_CASE("lambda schedule multiplies to eta") {
    const auto l = lambda_schedule(0.9, 5);
    double p = 1.0;
    for (double x : l) {
        CHECK(x > 0.9);
        CHECK(x < 1.0);
        p *= x;
    }
    CHECK(p == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(l.front() > l.back());  // lambda nearest 1 is the strictest split
}

TEST_CASE("split of [0,1) under f = 1 halves exactly") {
    const auto s = split_set(DyadicSet::full(), *uniform_weight(), 0.9, 1);
    CHECK(s.chosen_n == 1);
    CHECK(s.integral_A0 == 0.5);
    CHECK(s.integral_A1 == 0.5);
    CHECK(s.A0.measure() == 0.5);
}

TEST_CASE("split bounds hold for the log weight") {
    const auto w = log_weight();
    const auto s = split_set(DyadicSet::full(), *w, 0.95, 1);
    CHECK(split_bounds_hold(s.integral_A, s.integral_A0, 0.95));
    CHECK(split_bounds_hold(s.integral_A, s.integral_A1, 0.95));
    CHECK(s.integral_A0 + s.integral_A1 == doctest::Approx(s.integral_A).epsilon(1e-12));
}

TEST_CASE("weighted tree for the log weight validates") {
    const auto w = log_weight();
    const auto tree = build_weighted_system(w, 0.9, 4);
    CHECK(tree.indices.size() == 4);
    for (std::size_t i = 1; i < tree.indices.size(); ++i) CHECK(tree.indices[i] > tree.indices[i - 1]);
    const auto v = validate_tree(tree, *w, 3);
    CHECK(v.nodes.size() == 30);
    CHECK(v.pass);
    const auto q = norm_equivalence_check(tree, {1.0, -0.5, 2.0, 0.25});
    CHECK(q.pass);
    CHECK(q.ratio >= 0.9);
    CHECK(q.ratio <= 1.0 / 0.9);
}

TEST_CASE("f = 1 reproduces the classical Rademacher system") {
    const auto tree = build_weighted_system(uniform_weight(), 0.9, 4);
    for (int k = 1; k <= 4; ++k) CHECK(tree.indices[static_cast<std::size_t>(k - 1)] == k);
    CHECK(leaf_basis(tree) == classical_basis(4));
}

TEST_CASE("log weight tail bound and its auxiliary inequalities") {
    const auto r = log_weight_tail_check(default_log_tail_grid(10));
    CHECK(r.t0 > 8.0);
    CHECK(r.t0 < 9.0);
    CHECK(all_pass(r.checks));
    for (std::size_t i = 0; i < r.t_grid.size(); ++i) CHECK(r.tail[i] >= r.bound[i]);
}

TEST_CASE("Rademacher tail decays like a Gaussian") {
    std::vector<double> grid;
    for (int i = 1; i <= 40; ++i) grid.push_back(0.1 * i);
    const auto r = rademacher_tail_check(5000, grid, 3, 6, 2);
    CHECK(r.slope < 0.0);
    CHECK(r.r_squared >= 0.9);
    CHECK(r.smoothness.regime == Regime::power_2);
}
