#include "renorm/l1/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "renorm/core/root_finding.hpp"

namespace renorm {
namespace {

constexpr double kE = std::numbers::e;

class LogWeight final : public AnalyticWeight {
public:
    Kind kind() const override { return Kind::log_singular; }
    std::string name() const override { return "logweight"; }

    double value(double x) const override {
        if (x <= 0.0) return std::numeric_limits<double>::infinity();
        const double l = 1.0 - std::log(x);
        return 1.0 / (x * l * l);
    }
    double antiderivative(double x) const override {
        if (x <= 0.0) return 0.0;
        return 1.0 / (1.0 - std::log(x));
    }
    Jet jet(double x, double scale) const override {
        const Jet X = Jet::variable(x, scale);
        const Jet L = log(X) * -1.0 + 1.0;
        return reciprocal(X * L * L);
    }
    std::vector<Interval> superlevel(double tau) const override {
        if (tau < kE / 4.0) return {{0.0, 1.0}};
        const double lo = log_weight_inverse_decreasing(tau);
        if (tau >= 1.0) return {{0.0, lo}};
        return {{0.0, lo}, {log_weight_inverse_increasing(tau), 1.0}};
    }
    double sup() const override { return std::numeric_limits<double>::infinity(); }
};

class UniformWeight final : public AnalyticWeight {
public:
    Kind kind() const override { return Kind::user_defined; }
    std::string name() const override { return "uniform"; }
    double value(double) const override { return 1.0; }
    double antiderivative(double x) const override { return x; }
    Jet jet(double, double) const override { return Jet::constant(1.0); }
    std::vector<Interval> superlevel(double tau) const override {
        if (tau < 1.0) return {{0.0, 1.0}};
        return {};
    }
    double sup() const override { return 1.0; }
};

class PowerWeight final : public AnalyticWeight {
public:
    explicit PowerWeight(double a) : a_(a) {
        if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("power weight exponent must be in [0,1)");
    }
    Kind kind() const override { return Kind::user_defined; }
    std::string name() const override { return "power:" + std::to_string(a_); }
    double value(double x) const override { return (1.0 - a_) * std::pow(x, -a_); }
    double antiderivative(double x) const override { return x <= 0.0 ? 0.0 : std::pow(x, 1.0 - a_); }
    Jet jet(double x, double scale) const override {
        if (a_ == 0.0) return Jet::constant(1.0);
        return exp(log(Jet::variable(x, scale)) * -a_) * (1.0 - a_);
    }
    std::vector<Interval> superlevel(double tau) const override {
        const double c = 1.0 - a_;
        if (a_ == 0.0) return tau < 1.0 ? std::vector<Interval>{{0.0, 1.0}} : std::vector<Interval>{};
        if (tau < c) return {{0.0, 1.0}};
        // (1-a) x^{-a} > tau  <=>  x < (c/tau)^{1/a}
        return {{0.0, std::pow(c / tau, 1.0 / a_)}};
    }
    double sup() const override { return a_ == 0.0 ? 1.0 : std::numeric_limits<double>::infinity(); }

private:
    double a_;
};

}  // namespace

WeightPtr log_weight() {
    static const WeightPtr w = std::make_shared<LogWeight>();
    return w;
}
WeightPtr uniform_weight() {
    static const WeightPtr w = std::make_shared<UniformWeight>();
    return w;
}
WeightPtr power_weight(double a) { return std::make_shared<PowerWeight>(a); }

double log_weight_inverse_decreasing(double tau) {
    if (!(tau >= kE / 4.0)) throw std::domain_error("log weight inverse: tau below the minimum e/4");
    // With u = -log x the branch reads h(u) = u - 2 log(1+u) - log(tau) = 0 on
    // u >= 1; h is increasing and convex there, so Newton started right of the
    // root decreases monotonically onto it.
    const double lt = std::log(tau);
    auto h = [lt](double u) { return u - 2.0 * std::log1p(u) - lt; };
    double u = 2.0 * std::max(lt, 1.0) + 10.0;
    for (int it = 0; it < 100; ++it) {
        const double step = h(u) / ((u - 1.0) / (u + 1.0));
        const double next = std::max(1.0, u - step);
        if (!(next < u)) break;
        u = next;
    }
    return std::exp(-u);
}

double log_weight_inverse_increasing(double tau) {
    if (!(tau >= kE / 4.0 && tau <= 1.0)) throw std::domain_error("log weight inverse: tau outside [e/4, 1]");
    const auto& w = *log_weight();
    auto g = [&](double x) { return w.value(x) - tau; };
    return bisect(g, 1.0 / kE, 1.0, 0.0).root;
}

double l1_norm(const AnalyticWeight& f) { return f.antiderivative(1.0); }

double distribution(const AnalyticWeight& f, double t) {
    double m = 0.0;
    for (const auto& iv : f.superlevel(t)) m += iv.length();
    return m;
}

double tail_integral(const AnalyticWeight& f, double t) {
    double s = 0.0;
    for (const auto& iv : f.superlevel(t)) s += f.integral(iv.lo, iv.hi) - t * iv.length();
    return std::max(0.0, s);
}

StepFunction conditional_expectation(const AnalyticWeight& f, int k) {
    if (k < 0 || k > kMaxStepLevel) throw std::invalid_argument("conditional_expectation: level out of range");
    const std::size_t n = std::size_t{1} << k;
    std::vector<double> v(n);
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double next = f.antiderivative(std::ldexp(static_cast<double>(i + 1), -k));
        v[i] = std::ldexp(next - prev, k);
        prev = next;
    }
    return StepFunction(k, std::move(v));
}

}  // namespace renorm
