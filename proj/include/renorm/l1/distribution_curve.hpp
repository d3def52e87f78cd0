#pragma once

#include <iosfwd>
#include <vector>

#include "renorm/l1/cell_model.hpp"

namespace renorm {

/// Samples of F_f(t) = mu(|f| > t) on an increasing grid.
struct DistributionCurve {
    std::vector<double> t_grid;
    std::vector<double> values;
};

DistributionCurve distribution_curve(const CellFunction& f, const std::vector<double>& t_grid);
void write_csv(std::ostream& os, const DistributionCurve& curve);

}  // namespace renorm
