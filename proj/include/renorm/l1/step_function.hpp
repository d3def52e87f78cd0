#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace renorm {

inline constexpr int kMaxStepLevel = 24;
inline constexpr int kDefaultStepLevel = 16;

/// A function on [0,1) constant on the 2^level dyadic intervals I_s.
class StepFunction {
public:
    StepFunction() : StepFunction(0, {0.0}) {}
    StepFunction(int level, std::vector<double> values);

    static StepFunction constant(double c, int level = 0);
    /// h on [a,b), 0 elsewhere; a and b must be dyadic rationals of level <= 24.
    static StepFunction indicator(double a, double b, double h);

    int level() const { return level_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double cell_measure() const;

    double value_at(double x) const;
    /// Same function sampled on the finer grid of level m >= level().
    StepFunction refine(int m) const;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    int level_;
    std::vector<double> values_;
};

/// r_n = sign(sin(2^n pi x)): +1 on the first level-n cell, alternating.
StepFunction rademacher(int n);

double l1_norm(const StepFunction& f);
/// mu(|f| > t), strict inequality.
double distribution(const StepFunction& f, double t);
/// int_t^inf mu(|f| > u) du = int (|f| - t)^+.
double tail_integral(const StepFunction& f, double t);
/// Level-k dyadic averages; k may be above or below f.level().
StepFunction conditional_expectation(const StepFunction& f, int k);

/// Smallest level m with x * 2^m an integer, or -1 if above kMaxStepLevel.
int dyadic_level(double x);

/// CSV with header cell_index,value.
void write_csv(std::ostream& os, const StepFunction& f);
/// Reads either a two-column cell_index,value CSV (header optional) or one
/// value per line. The value count must be a power of two.
StepFunction read_step_csv(std::istream& is);

}  // namespace renorm
