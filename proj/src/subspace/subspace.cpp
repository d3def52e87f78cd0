#include "renorm/subspace/subspace.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "renorm/simd/kernels.hpp"

namespace renorm {

Subspace::Subspace(ModelPtr model, std::vector<std::vector<double>> basis, std::string label)
    : model_(std::move(model)), basis_(std::move(basis)), label_(std::move(label)) {
    if (basis_.empty()) throw DegenerateBasis("subspace: empty basis");
    const std::size_t cells = model_->cell_count();
    for (const auto& b : basis_) {
        if (b.size() != cells) throw std::invalid_argument("subspace: basis vector length does not match the model");
    }
    const std::size_t d = basis_.size();
    std::vector<double> l1(d);
    for (std::size_t i = 0; i < d; ++i) {
        l1[i] = model_->l1(basis_[i]);
        if (!(l1[i] > 0.0)) throw DegenerateBasis("subspace: basis element " + std::to_string(i) + " is zero");
    }
    Eigen::MatrixXd gram(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < cells; ++c) s += basis_[i][c] * basis_[j][c] * model_->gram_mass(c);
            gram(i, j) = gram(j, i) = s / (l1[i] * l1[j]);
        }
    }
    gram_det_ = gram.determinant();
    if (!(std::abs(gram_det_) > kGramTolerance)) {
        throw DegenerateBasis("subspace '" + label_ + "': basis is numerically dependent (Gram determinant " +
                              std::to_string(gram_det_) + ")");
    }
}

std::vector<double> Subspace::combine(std::span<const double> a) const {
    std::vector<double> out(model_->cell_count(), 0.0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (a[i] != 0.0) simd::axpy(a[i], basis_[i], out);
    }
    return out;
}

double Subspace::norm(std::span<const double> a, NormKind kind, double tol) const {
    const auto v = combine(a);
    if (kind == NormKind::l1) return model_->l1(v);
    return luxemburg_norm(*model_, v, tol).lambda;
}

namespace {

Subspace from_steps(const std::vector<StepFunction>& fns, std::string label) {
    int level = 0;
    for (const auto& f : fns) level = std::max(level, f.level());
    std::vector<std::vector<double>> basis;
    for (const auto& f : fns) {
        const auto r = f.refine(level);
        basis.emplace_back(r.values().begin(), r.values().end());
    }
    return Subspace(std::make_shared<StepModel>(level), std::move(basis), std::move(label));
}

}  // namespace

Subspace constants_span() { return from_steps({StepFunction::constant(1.0)}, "constants"); }

Subspace rademacher_span(int d) {
    if (d < 1) throw std::invalid_argument("rademacher span: d must be >= 1");
    std::vector<StepFunction> fns;
    for (int j = 1; j <= d; ++j) fns.push_back(rademacher(j));
    return from_steps(fns, "rademacher:" + std::to_string(d));
}

Subspace const_rademacher_span(int d) {
    if (d < 1) throw std::invalid_argument("const-rademacher span: d must be >= 1");
    std::vector<StepFunction> fns{StepFunction::constant(1.0)};
    for (int j = 1; j <= d; ++j) fns.push_back(rademacher(j));
    return from_steps(fns, "const-rademacher:" + std::to_string(d));
}

Subspace step_span(const std::vector<StepFunction>& fns, std::string label) {
    if (fns.empty()) throw DegenerateBasis("step span: no functions");
    return from_steps(fns, std::move(label));
}

}  // namespace renorm
