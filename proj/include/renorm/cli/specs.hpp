#pragma once

#include <stdexcept>
#include <string>

#include "renorm/l1/cell_model.hpp"
#include "renorm/lab/weighted_tree.hpp"
#include "renorm/subspace/subspace.hpp"

namespace renorm {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ParsedFunction {
    std::string label;
    CellFunction function;
};

/// "constant c", "indicator a b h", "rademacher n", "logweight", or a path to
/// a step-function CSV.
ParsedFunction parse_function_spec(const std::string& spec, double quadrature_tolerance = kDefaultQuadratureTolerance);

/// "uniform", "logweight" or "power:a".
WeightPtr parse_weight_spec(const std::string& spec);

/// "constants", "rademacher:d", "const-rademacher:d",
/// "weighted:<weight>:eta:depth" or "file:path" (CSV: cell_index then one
/// column per basis function, 2^m rows).
Subspace parse_subspace_spec(const std::string& spec);

}  // namespace renorm
