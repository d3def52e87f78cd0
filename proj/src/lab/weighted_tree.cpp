#include "renorm/lab/weighted_tree.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "renorm/core/parallel.hpp"
#include "renorm/core/random.hpp"
#include "renorm/l1/pattern_integral.hpp"

namespace renorm {

bool split_bounds_hold(double integral_A, double integral_Ai, double lambda) {
    const double lo = 0.5 * lambda * integral_A * (1.0 - kSplitSlack);
    const double hi = 0.5 / lambda * integral_A * (1.0 + kSplitSlack);
    return integral_Ai >= lo && integral_Ai <= hi;
}

int delta_certificate_level(const DyadicSet& A, const AnalyticWeight& g, double lambda, int cap) {
    const double total = integrate_set(WeightIntegrand(g), A);
    const double delta = 0.25 * (1.0 - lambda);
    for (int k = A.level(); k <= std::min(cap, kMaxMaskLevel); ++k) {
        const DyadicSet cells = A.to_mask(k);
        const std::uint64_t n = std::uint64_t{1} << k;
        const double width = std::ldexp(1.0, -k);
        // On each cell I with average c, int_I |g - c| = 2 int_{I, g > c} (g - c).
        double err = 0.0;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!cells.has_base_cell(i)) continue;
            const double a = std::ldexp(static_cast<double>(i), -k);
            const double b = a + width;
            const double c = g.integral(a, b) / width;
            for (const auto& iv : g.superlevel(c)) {
                const double lo = std::max(a, iv.lo);
                const double hi = std::min(b, iv.hi);
                if (hi > lo) err += 2.0 * (g.integral(lo, hi) - c * (hi - lo));
            }
        }
        if (err < delta * total) return k;
    }
    return -1;
}

namespace {

std::optional<SplitResult> try_split(const DyadicSet& A, const AnalyticWeight& g, double lambda, int n,
                                     double integral_A) {
    const WeightIntegrand w(g);
    SplitResult r;
    r.chosen_n = n;
    r.A0 = A.restrict(n, 0);
    r.A1 = A.restrict(n, 1);
    r.integral_A = integral_A;
    r.integral_A0 = integrate_set(w, r.A0);
    r.integral_A1 = integrate_set(w, r.A1);
    r.lambda = lambda;
    const bool halves = 2.0 * r.A0.measure() == A.measure() && 2.0 * r.A1.measure() == A.measure();
    if (halves && split_bounds_hold(integral_A, r.integral_A0, lambda) &&
        split_bounds_hold(integral_A, r.integral_A1, lambda)) {
        return r;
    }
    return std::nullopt;
}

}  // namespace

SplitResult split_set(const DyadicSet& A, const AnalyticWeight& g, double lambda, int n_min,
                      const SplitOptions& options) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("split_set: lambda must be in (0,1)");
    if (n_min <= A.level()) throw std::invalid_argument("split_set: n_min must exceed the set level");
    const double integral_A = integrate_set(WeightIntegrand(g), A);
    if (!(integral_A > 0.0)) throw std::invalid_argument("split_set: weight has no mass on the set");

    if (A.level() <= options.certificate_cap) {
        const int k = delta_certificate_level(A, g, lambda, options.certificate_cap);
        if (k >= 0) {
            if (auto r = try_split(A, g, lambda, std::max(k + 1, n_min), integral_A)) {
                r->certificate = "delta";
                r->certified_level = k;
                return *r;
            }
        }
    }
    for (int n = n_min; n <= options.max_digit; ++n) {
        if (auto r = try_split(A, g, lambda, n, integral_A)) {
            r->certificate = "direct";
            return *r;
        }
    }
    throw ApproximationFailure("split_set: no digit up to " + std::to_string(options.max_digit) +
                               " balances the set within lambda = " + std::to_string(lambda));
}

std::vector<double> lambda_schedule(double eta, int depth) {
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must be in (0,1)");
    if (depth < 1 || depth > 30) throw std::invalid_argument("depth must be in [1,30]");
    std::vector<double> out;
    const double denom = std::ldexp(1.0, depth) - 1.0;
    for (int k = 1; k <= depth; ++k) out.push_back(std::pow(eta, std::ldexp(1.0, k - 1) / denom));
    return out;
}

WeightedTree build_weighted_system(WeightPtr f, double eta, int depth, const SplitOptions& options) {
    WeightedTree tree;
    tree.weight_name = f->name();
    tree.depth = depth;
    tree.eta = eta;
    tree.lambdas = lambda_schedule(eta, depth);
    const WeightIntegrand w(*f);
    const double total = integrate_set(w, DyadicSet::full());
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("build_weighted_system: weight must have unit mass");
    tree.levels.push_back({TreeNode{"", DyadicSet::full(), total, eta, 1.0 / eta, ""}});

    for (int k = 0; k < depth; ++k) {
        const auto& parents = tree.levels.back();
        const double lambda = tree.lambdas[k];
        const int n_min = k == 0 ? 1 : tree.indices.back() + 1;
        auto per_node = parallel_map<SplitResult>(parents.size(), [&](std::size_t i) {
            try {
                return split_set(parents[i].set, *f, lambda, n_min, options);
            } catch (const ApproximationFailure& e) {
                throw ApproximationFailure(std::string(e.what()) + " at node '" + parents[i].path + "'");
            }
        });
        int n = n_min;
        for (const auto& r : per_node) n = std::max(n, r.chosen_n);

        // The common digit must work for every node; the per-node minima do
        // not guarantee that, so step forward until it does.
        std::vector<std::optional<SplitResult>> common;
        for (;; ++n) {
            if (n > options.max_digit) throw ApproximationFailure("build_weighted_system: no common digit at level " + std::to_string(k + 1));
            common = parallel_map<std::optional<SplitResult>>(parents.size(), [&](std::size_t i) {
                return try_split(parents[i].set, *f, lambda, n, parents[i].integral);
            });
            if (std::all_of(common.begin(), common.end(), [](const auto& r) { return r.has_value(); })) break;
        }
        tree.indices.push_back(n);
        std::vector<TreeNode> children;
        const double lower = eta * std::ldexp(1.0, -(k + 1));
        const double upper = std::ldexp(1.0, -(k + 1)) / eta;
        for (std::size_t i = 0; i < parents.size(); ++i) {
            const auto& r = *common[i];
            const std::string cert = per_node[i].certificate;
            children.push_back({parents[i].path + "0", r.A0, r.integral_A0, lower, upper, cert});
            children.push_back({parents[i].path + "1", r.A1, r.integral_A1, lower, upper, cert});
        }
        tree.levels.push_back(std::move(children));
    }
    return tree;
}

TreeValidation validate_tree(const WeightedTree& tree, const AnalyticWeight& f, std::uint64_t seed,
                             int points_per_node) {
    TreeValidation out;
    const WeightIntegrand w(f);
    bool all = true;
    for (int k = 1; k <= tree.depth; ++k) {
        const auto& level = tree.levels[k];
        const auto& parents = tree.levels[k - 1];
        const int digit = tree.indices[k - 1];
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto& node = level[i];
            NodeValidation v;
            v.path = node.path;
            // Measure: exactly 2^-k, and the constraint list is exactly the
            // digits n_1..n_k fixed to the path.
            bool shape = node.set.constraints().size() == static_cast<std::size_t>(k) && node.path.size() == static_cast<std::size_t>(k);
            for (int j = 0; shape && j < k; ++j) {
                const auto& c = node.set.constraints()[j];
                shape = c.position == tree.indices[j] && c.bit == node.path[j] - '0';
            }
            v.measure_ok = shape && node.set.measure() == std::ldexp(1.0, -k);

            // Partition: sampled parent points land in exactly the child picked
            // by their digit n_k.
            const auto& parent = parents[i / 2];
            const auto& sibling = level[i ^ 1];
            Rng rng(stream_seed(seed, 0x7061727469ULL, static_cast<std::uint64_t>(k) * 4096 + i));
            bool part = node.set == parent.set.restrict(digit, static_cast<int>(i & 1));
            for (int p = 0; part && p < points_per_node; ++p) {
                const auto x = DyadicPoint::random_in(parent.set, rng, tree.indices[k - 1] + 8);
                const bool here = x.in(node.set);
                const bool there = x.in(sibling.set);
                part = (here != there) && (here == (x.digit(digit) == static_cast<int>(i & 1)));
            }
            v.partition_ok = part;

            // Sandwich: recompute the integral along a different split of [0,1].
            v.integral = integrate_set(w, node.set, 0.0, 0.5) + integrate_set(w, node.set, 0.5, 1.0);
            const double lower = tree.eta * std::ldexp(1.0, -k);
            const double upper = std::ldexp(1.0, -k) / tree.eta;
            v.sandwich_ok = v.integral >= lower && v.integral <= upper &&
                            std::abs(v.integral - node.integral) <= 1e-12 * node.integral;

            // Sign constancy of r_{n_1..n_k} on the node.
            bool signs = true;
            for (int p = 0; signs && p < points_per_node; ++p) {
                const auto x = DyadicPoint::random_in(node.set, rng, tree.indices[k - 1] + 8);
                for (int j = 0; j < k; ++j) {
                    if (x.rademacher(tree.indices[j]) != (node.path[j] == '0' ? 1 : -1)) signs = false;
                }
            }
            v.sign_ok = signs;
            all = all && v.measure_ok && v.partition_ok && v.sandwich_ok && v.sign_ok;
            out.nodes.push_back(v);
        }
    }
    out.pass = all;
    return out;
}

NormEquivalence norm_equivalence_check(const WeightedTree& tree, const std::vector<double>& a) {
    if (a.size() != static_cast<std::size_t>(tree.depth)) {
        throw std::invalid_argument("norm_equivalence_check: need one coefficient per tree level");
    }
    const auto& leaves = tree.levels.back();
    NormEquivalence r;
    double lhs = 0.0, mid = 0.0;
    for (const auto& leaf : leaves) {
        // On A_s^K the combination sum a_j r_{n_j} takes the value that
        // sum a_j r_j takes on I_s^K.
        double v = 0.0;
        for (int j = 0; j < tree.depth; ++j) v += leaf.path[j] == '0' ? a[j] : -a[j];
        lhs += std::abs(v);
        mid += std::abs(v) * leaf.integral;
    }
    lhs = std::ldexp(lhs, -tree.depth);
    if (!(lhs > 0.0)) throw std::invalid_argument("norm_equivalence_check: coefficients are all zero");
    r.lhs = lhs;
    r.mid = mid;
    r.rhs = lhs / tree.eta;
    r.ratio = mid / lhs;
    r.ratio_low = tree.eta;
    r.ratio_high = 1.0 / tree.eta;
    r.pass = r.ratio >= r.ratio_low * (1.0 - 1e-12) && r.ratio <= r.ratio_high * (1.0 + 1e-12);
    return r;
}

std::shared_ptr<const WeightedModel> leaf_model(const WeightedTree& tree, WeightPtr f) {
    std::vector<DyadicSet> cells;
    for (const auto& leaf : tree.levels.back()) cells.push_back(leaf.set);
    return std::make_shared<WeightedModel>(std::move(cells), std::move(f));
}

std::vector<std::vector<double>> leaf_basis(const WeightedTree& tree) {
    const auto& leaves = tree.levels.back();
    std::vector<std::vector<double>> basis(tree.depth, std::vector<double>(leaves.size()));
    for (std::size_t s = 0; s < leaves.size(); ++s) {
        for (int j = 0; j < tree.depth; ++j) basis[j][s] = leaves[s].path[j] == '0' ? 1.0 : -1.0;
    }
    return basis;
}

std::vector<std::vector<double>> classical_basis(int depth) {
    std::vector<std::vector<double>> basis;
    for (int j = 1; j <= depth; ++j) {
        const auto r = rademacher(j).refine(depth);
        basis.emplace_back(r.values().begin(), r.values().end());
    }
    return basis;
}

}  // namespace renorm
