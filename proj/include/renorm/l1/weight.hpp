#pragma once

#include <memory>
#include <string>
#include <vector>

#include "renorm/core/jet.hpp"
#include "renorm/l1/step_function.hpp"

namespace renorm {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// Nonnegative integrable weight on (0,1] with an exact antiderivative.
class AnalyticWeight {
public:
    enum class Kind { log_singular, user_defined };

    virtual ~AnalyticWeight() = default;
    virtual Kind kind() const = 0;
    virtual std::string name() const = 0;
    virtual double value(double x) const = 0;
    /// int_0^x f; nondecreasing with antiderivative(0) = 0.
    virtual double antiderivative(double x) const = 0;
    /// Taylor jet of f(x + scale e); x > 0.
    virtual Jet jet(double x, double scale) const = 0;
    /// {x in [0,1] : f(x) > tau} as disjoint sorted intervals.
    virtual std::vector<Interval> superlevel(double tau) const = 0;
    /// ess sup f (+inf when unbounded).
    virtual double sup() const = 0;

    double integral(double a, double b) const { return antiderivative(b) - antiderivative(a); }
};

using WeightPtr = std::shared_ptr<const AnalyticWeight>;

/// f(x) = 1/(x log^2(x/e)), antiderivative -1/log(x/e). Decreasing on
/// (0, 1/e], increasing on [1/e, 1], f(1) = 1, min f = e/4.
WeightPtr log_weight();
/// f = 1.
WeightPtr uniform_weight();
/// f(x) = (1-a) x^{-a}, 0 <= a < 1; integrable, in L^p only for p < 1/a.
WeightPtr power_weight(double a);

/// Inverse of the log weight on its decreasing branch: the x in (0, 1/e]
/// with f(x) = tau, for tau >= e/4.
double log_weight_inverse_decreasing(double tau);
/// Inverse on the increasing branch [1/e, 1], for e/4 <= tau <= 1.
double log_weight_inverse_increasing(double tau);

double l1_norm(const AnalyticWeight& f);
double distribution(const AnalyticWeight& f, double t);
/// int (f - t)^+ from the superlevel set and the antiderivative.
double tail_integral(const AnalyticWeight& f, double t);
/// Level-k averages computed from exact cell integrals.
StepFunction conditional_expectation(const AnalyticWeight& f, int k);

}  // namespace renorm
