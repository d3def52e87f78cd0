#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "renorm/l1/cell_model.hpp"
#include "renorm/l1/dyadic_set.hpp"
#include "renorm/l1/weight.hpp"

namespace renorm {

class ApproximationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SplitOptions {
    /// Largest level at which the conditional-expectation certificate is
    /// attempted (it enumerates 2^level cells).
    int certificate_cap = 16;
    /// Deepest digit tried by the direct search.
    int max_digit = kMaxDigit;
};

struct SplitResult {
    int chosen_n = 0;
    DyadicSet A0;
    DyadicSet A1;
    double integral_A = 0.0;
    double integral_A0 = 0.0;
    double integral_A1 = 0.0;
    double lambda = 0.0;
    /// "delta" when a level-k conditional expectation met the approximation
    /// criterion (k = certified_level), "direct" when the digit was found by
    /// checking the split conclusions themselves.
    std::string certificate;
    int certified_level = -1;
};

/// Relative slack on the integral bounds, absorbing rounding in the exact
/// cell integrals.
inline constexpr double kSplitSlack = 1e-12;

bool split_bounds_hold(double integral_A, double integral_Ai, double lambda);

/// Finds a digit n >= n_min and splits A by digit n into A0 (digit 0, where
/// r_n = +1) and A1 (digit 1, r_n = -1) with equal measure and
/// (lambda/2) int_A g <= int_{A_i} g <= (1/(2 lambda)) int_A g.
SplitResult split_set(const DyadicSet& A, const AnalyticWeight& g, double lambda, int n_min,
                      const SplitOptions& options = {});

/// Smallest k in [level(A), cap] with int_A |g - E_k g| < (1-lambda)/4 int_A g,
/// or -1.
int delta_certificate_level(const DyadicSet& A, const AnalyticWeight& g, double lambda, int cap);

struct TreeNode {
    std::string path;  // s in {0,1}^k; "" for the root
    DyadicSet set;
    double integral = 0.0;
    double lower = 0.0;  // eta 2^-k
    double upper = 0.0;  // 2^-k / eta
    std::string certificate;
};

struct WeightedTree {
    std::string weight_name;
    int depth = 0;
    double eta = 0.0;
    std::vector<double> lambdas;  // lambda_1 .. lambda_K
    std::vector<int> indices;     // n_1 < ... < n_K
    /// levels[k] holds the 2^k nodes of length-k paths in binary order.
    std::vector<std::vector<TreeNode>> levels;
};

/// lambda_k = eta^{2^{k-1}/(2^K - 1)}: the product over k <= K is exactly eta
/// and the strictest factor goes to the first split, where nodes are largest.
std::vector<double> lambda_schedule(double eta, int depth);

WeightedTree build_weighted_system(WeightPtr f, double eta, int depth, const SplitOptions& options = {});

/// Per-node invariant results from an independent pass over a built tree.
struct NodeValidation {
    std::string path;
    bool measure_ok = false;    // mu(A_s) = 2^-k exactly
    bool partition_ok = false;  // children split the parent by digit n_{k+1}
    bool sandwich_ok = false;   // eta 2^-k <= int f <= 2^-k / eta
    bool sign_ok = false;       // r_{n_j} = (-1)^{s_j} on sampled points
    double integral = 0.0;
};

struct TreeValidation {
    std::vector<NodeValidation> nodes;  // all non-root nodes
    bool pass = false;
};

TreeValidation validate_tree(const WeightedTree& tree, const AnalyticWeight& f, std::uint64_t seed = 1,
                             int points_per_node = 64);

struct NormEquivalence {
    double lhs = 0.0;  // || sum a_j r_j ||_1
    double mid = 0.0;  // || sum a_j r_{n_j} f ||_1
    double rhs = 0.0;  // lhs / eta
    double ratio = 0.0;
    double ratio_low = 0.0;   // eta
    double ratio_high = 0.0;  // 1/eta
    bool pass = false;
};

NormEquivalence norm_equivalence_check(const WeightedTree& tree, const std::vector<double>& coefficients);

/// The leaf cells A_s^K with the weight, and the K basis vectors f r_{n_j}
/// expressed on them.
std::shared_ptr<const WeightedModel> leaf_model(const WeightedTree& tree, WeightPtr f);
std::vector<std::vector<double>> leaf_basis(const WeightedTree& tree);

/// Rademacher basis on level-K cells (r_1..r_K), the classical counterpart.
std::vector<std::vector<double>> classical_basis(int depth);

}  // namespace renorm
