#pragma once

#include <cmath>

namespace renorm {

/// M and its first two derivatives at one point.
struct OrliczEval {
    double t = 0.0;
    double value = 0.0;
    double first_derivative = 0.0;
    double second_derivative = 0.0;
};

/// phi = M'': 2 on [0,1], 8/(1+t)^2 beyond; even.
inline double phi(double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return 2.0;
    const double d = 1.0 + a;
    return 8.0 / (d * d);
}

/// Closed form of the second primitive of phi with M(0) = M'(0) = 0.
inline double orlicz_value(double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return a * a;
    return 6.0 * a - 5.0 - 8.0 * std::log(0.5 * (1.0 + a));
}

inline double orlicz_derivative(double t) {
    const double a = std::abs(t);
    const double d = a <= 1.0 ? 2.0 * a : 6.0 - 8.0 / (1.0 + a);
    return t < 0 ? -d : d;
}

inline OrliczEval orlicz_M(double t) { return {t, orlicz_value(t), orlicz_derivative(t), phi(t)}; }

/// M(t) from its defining integral, int_0^|t| phi(u)(|t|-u) du, by adaptive
/// quadrature. Oracle for the closed form; never used on hot paths.
double orlicz_M_quadrature(double t, double rel_tol = 1e-14);

/// M(a) + M(b) - 2 M((a+b)/2) without the cancellation of the direct formula.
double midpoint_defect(double a, double b);

struct NormConstants {
    double k = 1.0 / 6.0;   // k ||f|| <= ||f||_1
    double C = 6.0;         // M(t) <= C |t|
    double K1 = 0.0;        // (k/18)^2
    double K2 = 0.0;        // 2 * 128 * C
    bool certified = false; // grid check of M(t) <= C t passed
    double max_ratio = 0.0; // largest M(t)/t seen on the grid
    double grid_max_t = 0.0;
};

/// k = 1/6 and C = 6 follow from sup M(t)/t = lim M'(t) = int_0^inf phi = 6.
/// Certified once per process by a dense grid check on (0, 1e3] plus a
/// monotonicity check of M(t)/t.
const NormConstants& norm_equivalence_constants();

struct PowerBound {
    double p = 0.0;
    double c_p = 0.0;     // sup_u M(u)/|u|^p
    double argmax = 0.0;
    bool interior = false; // maximizer strictly inside the search grid
};

/// sup_u M(u)/|u|^p for 1 < p <= 2, by a log grid followed by golden-section
/// refinement around the best node.
PowerBound power_bound(double p);

}  // namespace renorm
