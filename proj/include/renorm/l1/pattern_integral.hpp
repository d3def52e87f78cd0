#pragma once

#include <span>

#include "renorm/core/jet.hpp"
#include "renorm/l1/dyadic_set.hpp"
#include "renorm/l1/weight.hpp"

namespace renorm {

/// A smooth-on-(0,1] integrand: local Taylor jets plus plain interval
/// integrals (exact where an antiderivative is known, adaptive otherwise).
class Integrand {
public:
    virtual ~Integrand() = default;
    virtual Jet jet(double x, double scale) const = 0;
    virtual double interval(double a, double b) const = 0;
};

class ConstantIntegrand final : public Integrand {
public:
    Jet jet(double, double) const override { return Jet::constant(1.0); }
    double interval(double a, double b) const override { return b - a; }
};

class WeightIntegrand final : public Integrand {
public:
    explicit WeightIntegrand(const AnalyticWeight& w) : w_(w) {}
    Jet jet(double x, double scale) const override { return w_.jet(x, scale); }
    double interval(double a, double b) const override { return w_.integral(a, b); }

private:
    const AnalyticWeight& w_;
};

/// w^2, integrated adaptively.
class SquaredWeightIntegrand final : public Integrand {
public:
    SquaredWeightIntegrand(const AnalyticWeight& w, double rel_tol) : w_(w), rel_tol_(rel_tol) {}
    Jet jet(double x, double scale) const override;
    double interval(double a, double b) const override;

private:
    const AnalyticWeight& w_;
    double rel_tol_;
};

/// log((1 + s w)/2), the logarithmic part of M(s w) where s w > 1.
class LogModularIntegrand final : public Integrand {
public:
    LogModularIntegrand(const AnalyticWeight& w, double s, double rel_tol) : w_(w), s_(s), rel_tol_(rel_tol) {}
    Jet jet(double x, double scale) const override;
    double interval(double a, double b) const override;

private:
    const AnalyticWeight& w_;
    double s_;
    double rel_tol_;
};

/// Periods below this many multiples of the leading constraint period are
/// resolved one by one; beyond it the endpoint expansion is used.
inline constexpr int kNearPeriods = 32;

/// From a >= 2^kFarPeriodsLog2 P on, the pattern is averaged out: the
/// integral is 2^-r int_a^b g up to O(P sup g), i.e. relative 2^-64.
inline constexpr int kFarPeriodsLog2 = 64;

/// int over {x in [a,b) : digit_{p_j}(x) = b_j for all j} of g.
///
/// The indicator of the constraint pattern is periodic with period
/// P = 2^{1-p_1} and mean 2^-r. Testing it against e^{sx} factorizes over
/// binary digits, giving
///   int_a^b g chi = 2^-r [ int_a^b g + sum_k e_k delta^k (g^{(k-1)}(b) - g^{(k-1)}(a)) ]
/// for a, b multiples of P, with delta = 2^-p_1 and
///   sum_k e_k u^k = prod_j (1 + sigma_j tanh(u 2^{p_1-p_j} / 2)),
/// sigma_j = +1 for a required 1 digit and -1 for a required 0. The series is
/// asymptotic; it is truncated at the jet order and only used at distance
/// >= kNearPeriods periods from 0, where the tail is below 1e-18 relative.
/// Periods nearer to 0 (and partial periods at unaligned endpoints) are split
/// into their constrained half and recursed on with the remaining constraints.
double integrate_pattern(const Integrand& g, std::span<const DigitConstraint> constraints, double a, double b);

/// int over set ∩ [a,b) of g.
double integrate_set(const Integrand& g, const DyadicSet& set, double a = 0.0, double b = 1.0);

}  // namespace renorm
