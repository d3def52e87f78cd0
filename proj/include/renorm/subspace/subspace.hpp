#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "renorm/l1/cell_model.hpp"
#include "renorm/l1/step_function.hpp"

namespace renorm {

enum class NormKind { l1, luxemburg };

class DegenerateBasis : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kGramTolerance = 1e-8;

/// A finite-dimensional subspace of L^1: basis vectors are coefficient
/// vectors over a shared cell model.
class Subspace {
public:
    Subspace(ModelPtr model, std::vector<std::vector<double>> basis, std::string label);

    std::size_t dim() const { return basis_.size(); }
    const CellModel& model() const { return *model_; }
    const ModelPtr& model_ptr() const { return model_; }
    const std::vector<std::vector<double>>& basis() const { return basis_; }
    const std::string& label() const { return label_; }
    /// Determinant of the Gram matrix of the L^1-normalized basis.
    double gram_determinant() const { return gram_det_; }

    /// Cell values of sum_i a_i g_i.
    std::vector<double> combine(std::span<const double> a) const;
    double norm(std::span<const double> a, NormKind kind, double tol = kDefaultScalarTolerance) const;

private:
    ModelPtr model_;
    std::vector<std::vector<double>> basis_;
    std::string label_;
    double gram_det_ = 0.0;
};

/// span{1}.
Subspace constants_span();
/// span{r_1, ..., r_d}.
Subspace rademacher_span(int d);
/// span{1, r_1, ..., r_d}.
Subspace const_rademacher_span(int d);
/// Span of arbitrary step functions (refined to a common level).
Subspace step_span(const std::vector<StepFunction>& fns, std::string label);

}  // namespace renorm
