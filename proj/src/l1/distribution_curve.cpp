#include "renorm/l1/distribution_curve.hpp"

#include <ostream>
#include <stdexcept>

#include "renorm/report/format.hpp"

namespace renorm {

DistributionCurve distribution_curve(const CellFunction& f, const std::vector<double>& t_grid) {
    DistributionCurve c;
    c.t_grid = t_grid;
    c.values.reserve(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0 || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
            throw std::invalid_argument("distribution curve: grid must be increasing and nonnegative");
        }
        c.values.push_back(distribution(f, t_grid[i]));
    }
    return c;
}

void write_csv(std::ostream& os, const DistributionCurve& curve) {
    os << "t,F\n";
    for (std::size_t i = 0; i < curve.t_grid.size(); ++i) {
        os << format_real(curve.t_grid[i]) << ',' << format_real(curve.values[i]) << '\n';
    }
}

}  // namespace renorm
