#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "renorm/l1/dyadic_set.hpp"
#include "renorm/l1/step_function.hpp"
#include "renorm/l1/weight.hpp"
#include "renorm/orlicz/luxemburg.hpp"

namespace renorm {

/// A partition of [0,1] into cells, each carrying a fixed nonnegative profile.
/// A function is a coefficient per cell: f = sum_s c_s profile_s. All L^1 and
/// Orlicz functionals of f reduce to per-cell integrals.
class CellModel {
public:
    virtual ~CellModel() = default;
    virtual std::size_t cell_count() const = 0;
    virtual std::string describe() const = 0;

    virtual double l1(std::span<const double> c) const = 0;
    virtual double distribution(std::span<const double> c, double t) const = 0;
    virtual double tail(std::span<const double> c, double t) const = 0;
    /// int M(f / lambda).
    virtual double modular(std::span<const double> c, double lambda) const = 0;
    /// Mass of cell s in the measure used for linear-independence checks.
    virtual double gram_mass(std::size_t s) const = 0;
    /// sup |f| (may be +inf for unbounded profiles).
    virtual double sup_abs(std::span<const double> c) const = 0;
};

using ModelPtr = std::shared_ptr<const CellModel>;

/// Dyadic step functions of a fixed level; profiles are cell indicators.
class StepModel final : public CellModel {
public:
    explicit StepModel(int level);
    int level() const { return level_; }
    std::size_t cell_count() const override { return std::size_t{1} << level_; }
    std::string describe() const override;
    double l1(std::span<const double> c) const override;
    double distribution(std::span<const double> c, double t) const override;
    double tail(std::span<const double> c, double t) const override;
    double modular(std::span<const double> c, double lambda) const override;
    double gram_mass(std::size_t) const override;
    double sup_abs(std::span<const double> c) const override;

private:
    int level_;
};

/// Cells are dyadic sets A_s with profile 1_{A_s} w: the span of weighted
/// functions constant on each A_s.
class WeightedModel final : public CellModel {
public:
    WeightedModel(std::vector<DyadicSet> cells, WeightPtr weight,
                  double quadrature_tolerance = kDefaultQuadratureTolerance);
    std::size_t cell_count() const override { return cells_.size(); }
    std::string describe() const override;
    double l1(std::span<const double> c) const override;
    double distribution(std::span<const double> c, double t) const override;
    double tail(std::span<const double> c, double t) const override;
    double modular(std::span<const double> c, double lambda) const override;
    double gram_mass(std::size_t s) const override { return mass_[s]; }
    double sup_abs(std::span<const double> c) const override;

    const std::vector<DyadicSet>& cells() const { return cells_; }
    const AnalyticWeight& weight() const { return *weight_; }
    /// int_{A_s} w
    double cell_integral(std::size_t s) const { return mass_[s]; }
    /// int over A_s ∩ [a,b) of w, and of 1.
    double cell_weight_integral(std::size_t s, double a, double b) const;
    double cell_measure(std::size_t s, double a, double b) const;
    /// int over A_s of M(|c| w / lambda) for one cell.
    double cell_modular(std::size_t s, double c_over_lambda) const;

private:
    std::vector<DyadicSet> cells_;
    WeightPtr weight_;
    double quad_tol_;
    std::vector<double> mass_;
    // Per cell: the point past which its digit pattern averages out, and the
    // weight and measure of the cell below it (the expensive part of every
    // integral starting at 0).
    std::vector<double> far_;
    std::vector<double> prefix_weight_;
    std::vector<double> prefix_measure_;
};

/// A function together with the model that interprets its coefficients.
struct CellFunction {
    ModelPtr model;
    std::vector<double> values;
};

CellFunction as_cell_function(const StepFunction& f);
/// The weight itself as a one-cell weighted function.
CellFunction as_cell_function(WeightPtr w, double quadrature_tolerance = kDefaultQuadratureTolerance);

double l1_norm(const CellFunction& f);
double distribution(const CellFunction& f, double t);
double tail_integral(const CellFunction& f, double t);

double modular(const CellModel& model, std::span<const double> c, double lambda);
double modular(const StepFunction& f, double lambda);
double modular(const CellFunction& f, double lambda);
double modular(WeightPtr w, double lambda);

NormSolution luxemburg_norm(const CellModel& model, std::span<const double> c,
                            double tolerance = kDefaultScalarTolerance);
NormSolution luxemburg_norm(const StepFunction& f, double tolerance = kDefaultScalarTolerance);
NormSolution luxemburg_norm(const CellFunction& f, double tolerance = kDefaultScalarTolerance);

}  // namespace renorm
