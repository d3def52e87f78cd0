#include "renorm/cli/suites.hpp"

#include <algorithm>
#include <cmath>

#include "renorm/cli/specs.hpp"
#include "renorm/lab/tail_checks.hpp"
#include "renorm/orlicz/orlicz.hpp"
#include "renorm/orlicz/properties.hpp"
#include "renorm/report/format.hpp"
#include "renorm/subspace/verify.hpp"

namespace renorm {

namespace {

constexpr std::uint64_t kTagCoefficients = 0x434f4546ULL;

}  // namespace

nlohmann::json echo(const ExperimentConfig& cfg) {
    auto j = to_json(cfg);
    j.erase("output_dir");  // artifacts must not depend on where they are written
    return j;
}

namespace {

VerificationReport report(const std::string& suite, const std::string& name, const ExperimentConfig& cfg) {
    VerificationReport r;
    r.suite = suite;
    r.name = name;
    r.config = echo(cfg);
    return r;
}

}  // namespace

SamplerConfig sampler(const ExperimentConfig& cfg, std::size_t samples) {
    SamplerConfig s;
    s.seed = cfg.seed;
    s.sample_count = samples;
    s.refinement_steps = cfg.refinement_steps;
    s.grid_points = cfg.grid_points;
    return s;
}

namespace {

void append(std::vector<Check>& to, const std::vector<Check>& from) { to.insert(to.end(), from.begin(), from.end()); }

nlohmann::json stats_json(const InequalityStats& s) {
    return {{"samples", s.samples}, {"violations", s.violations}, {"worst_margin", s.worst_margin},
            {"worst_a", s.worst_a}, {"worst_b", s.worst_b}};
}

nlohmann::json set_json(const DyadicSet& set) {
    nlohmann::json digits = nlohmann::json::array();
    for (const auto& c : set.constraints()) digits.push_back({c.position, c.bit});
    return {{"base_level", set.base_level()}, {"base_mask_hex", set.mask_hex()}, {"digits", digits},
            {"measure", set.measure()}};
}

nlohmann::json tree_json(const WeightedTree& t) {
    nlohmann::json levels = nlohmann::json::array();
    for (std::size_t k = 1; k < t.levels.size(); ++k) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const auto& n : t.levels[k]) {
            nodes.push_back({{"path", n.path},
                             {"set", set_json(n.set)},
                             {"integral", n.integral},
                             {"lower", n.lower},
                             {"upper", n.upper},
                             {"certificate", n.certificate}});
        }
        levels.push_back({{"level", k}, {"n_k", t.indices[k - 1]}, {"lambda_k", t.lambdas[k - 1]}, {"nodes", nodes}});
    }
    double prod = 1.0;
    for (double l : t.lambdas) prod *= l;
    return {{"weight", t.weight_name}, {"depth", t.depth},   {"eta", t.eta},          {"lambdas", t.lambdas},
            {"lambda_product", prod},  {"indices", t.indices}, {"levels", levels}};
}

}  // namespace

nlohmann::json curve_json(const IndexCurve& c) {
    return {{"index_kind", to_string(c.index_kind)},
            {"direction", to_string(c.direction)},
            {"sampler", {{"seed", c.sampler.seed},
                         {"sample_count", c.sampler.sample_count},
                         {"refinement_steps", c.sampler.refinement_steps},
                         {"grid_points", c.sampler.grid_points}}},
            {"grid_modulus", c.grid_modulus},
            {"pool_size", c.pool_size}};
}

nlohmann::json smoothness_json(const SmoothnessClass& s) {
    return {{"regime", to_string(s.regime)},
            {"p_fit", std::isfinite(s.p_fit) ? nlohmann::json(s.p_fit) : nlohmann::json("inf")},
            {"fit_quality", s.fit_quality},
            {"integrable", s.integrable},
            {"diagnostic", s.diagnostic}};
}

std::string artifact_stem(const std::string& label) {
    std::string s = label;
    for (char& c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '_')) c = '_';
    }
    return s;
}

std::vector<std::string> default_theorem_spans() {
    return {"rademacher:2", "rademacher:3", "rademacher:4", "const-rademacher:1"};
}

SuiteOutput suite_orlicz(const ExperimentConfig& cfg) {
    SuiteOutput out{"orlicz", {}, {}};

    auto cf = closed_form_vs_quadrature(10000, 100.0);
    auto r = report(out.suite, "closed_form", cfg);
    r.checks.push_back(cf.check);
    r.results = {{"points", cf.points}, {"max_rel_error", cf.max_rel_error}, {"worst_t", cf.worst_t}};
    out.reports.push_back(std::move(r));

    r = report(out.suite, "pointwise", cfg);
    for (const auto& s : pointwise_inequalities(cfg.inequality_samples, cfg.seed)) {
        r.checks.push_back(s.check);
        r.results[s.name] = stats_json(s);
    }
    out.reports.push_back(std::move(r));

    r = report(out.suite, "power_bounds", cfg);
    r.checks = remark_power_bounds(100000, cfg.seed);
    Table pb{"power_bounds", {"p", "c_p", "argmax"}, {}};
    for (double p : {1.25, 1.5, 2.0}) {
        const auto b = power_bound(p);
        pb.add({p, b.c_p, b.argmax});
    }
    out.tables.push_back(std::move(pb));
    out.reports.push_back(std::move(r));

    r = report(out.suite, "constants", cfg);
    r.checks = constant_checks();
    append(r.checks, example_value_checks());
    const auto& nc = norm_equivalence_constants();
    r.results = {{"k", nc.k},
                 {"C", nc.C},
                 {"K1", nc.K1},
                 {"K2", nc.K2},
                 {"derived", "k = 1/6 and C = 6 are derived from lim M' = 6, not stated in the source"},
                 {"max_ratio_on_grid", nc.max_ratio}};
    out.reports.push_back(std::move(r));

    auto solver = luxemburg_solver_checks(cfg.solver_functions, cfg.step_level, cfg.seed, cfg.tolerance_scalar);
    r = report(out.suite, "solver", cfg);
    r.checks = solver.checks;
    r.results = {{"functions", solver.functions},
                 {"level", cfg.step_level},
                 {"max_residual", solver.max_residual},
                 {"norm_two_chi", solver.norm_two_chi},
                 {"oracle_two_chi", solver.oracle_two_chi}};
    out.reports.push_back(std::move(r));

    Table m{"orlicz_function", {"t", "M", "M_prime", "M_second"}, {}};
    for (int i = 0; i <= 200; ++i) {
        const auto e = orlicz_M(0.05 * i);
        m.add({e.t, e.value, e.first_derivative, e.second_derivative});
    }
    out.tables.push_back(std::move(m));
    return out;
}

SuiteOutput suite_lemma(const ExperimentConfig& cfg) {
    SuiteOutput out{"lemma", {}, {}};
    auto r = report(out.suite, "two_sided", cfg);
    for (const auto& s : lemma_two_sided(cfg.inequality_samples, cfg.seed)) {
        r.checks.push_back(s.check);
        r.results[s.name] = stats_json(s);
    }
    r.checks.push_back(check_close("sharpness_at_1_-1", "left bound is an equality at a = 1, b = -1",
                                   midpoint_defect(1.0, -1.0), 0.25 * phi(1.0) * 4.0, 0.0));
    out.reports.push_back(std::move(r));

    const std::vector<double> ts{0.1, 0.2, 0.3, 0.5, 0.7, 0.9, 1.0, 1.5, 2.0, 3.0};
    Table t{"convexity_lemma", {"subspace", "t", "min_margin", "lhs_at_min", "rhs_at_min"}, {}};
    r = report(out.suite, "convexity_lemma", cfg);
    for (const auto& spec : default_theorem_spans()) {
        const auto X = parse_subspace_spec(spec);
        auto res = convexity_lemma_check(X, ts, cfg.pair_count, cfg.seed);
        append(r.checks, res.checks);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            t.add_cells({X.label(), format_real(ts[i]), format_real(res.min_margin[i]), format_real(res.lhs_at_min[i]),
                         format_real(res.rhs_at_min[i])});
        }
    }
    r.results = {{"pairs_per_subspace", cfg.pair_count}};
    out.reports.push_back(std::move(r));
    out.tables.push_back(std::move(t));
    return out;
}

SuiteOutput suite_theorem_a(const ExperimentConfig& cfg, const std::vector<std::string>& spans) {
    SuiteOutput out{"theorem-a", {}, {}};
    const auto sc = sampler(cfg, std::min<std::size_t>(cfg.sample_count, 20000));

    // C index of span{1, r_1} is 1/2 on (0,1): max(|a|,|b|) = 1 and the
    // smallest superlevel set is one half.
    auto r = report(out.suite, "exact_indexes", cfg);
    const std::vector<double> probe{0.1, 0.3, 0.5, 0.7, 0.9};
    const auto c1 = index_curve(const_rademacher_span(1), IndexKind::C, probe, sc);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        r.checks.push_back(check_close("C_span{1,r1}[" + format_short(probe[i]) + "]",
                                       "C_X(t) = inf{F_f(t) : f in X, ||f||_1 = 1}", c1.estimates[i], 0.5, 1e-3));
    }
    r.checks.push_back(check_close("C_span{1}[0.5]", "C_X(t) for constants is 1",
                                   c_index(constants_span(), 0.5, sc), 1.0, 0.0));
    r.checks.push_back(check_close("C_span{r1}[0.99]", "|r_1| = 1 everywhere", c_index(rademacher_span(1), 0.99, sc),
                                   1.0, 0.0));
    r.results = {{"C_const_rademacher_1", curve_json(c1)}};
    out.reports.push_back(std::move(r));

    const auto eps = cfg.epsilon_grid.values();
    const auto ts = cfg.t_grid.values();
    for (const auto& spec : spans.empty() ? default_theorem_spans() : spans) {
        const auto X = parse_subspace_spec(spec);
        const auto stem = artifact_stem(X.label());
        auto a = verify_A(X, eps, ts, sampler(cfg, cfg.sample_count), cfg.pair_count);
        auto rep = report(out.suite, "A_" + stem, cfg);
        rep.checks = a.checks;
        rep.results = {{"subspace", X.label()},
                       {"K_X", a.kx.value},
                       {"argmax_t", a.kx.argmax_t},
                       {"C_at_argmax", a.kx.c_at_argmax},
                       {"bound_vacuous", a.vacuous},
                       {"delta_semantics", semantics(ModulusKind::delta)},
                       {"pair_count", a.delta.pair_count},
                       {"c_curve", curve_json(a.kx.c_curve)}};
        out.reports.push_back(std::move(rep));
        Table d{"delta_" + stem, {"argument", "estimate", "bound", "margin"}, {}};
        for (std::size_t i = 0; i < eps.size(); ++i) {
            d.add({eps[i], a.delta.estimates[i], a.bound[i], a.delta.estimates[i] - a.bound[i]});
        }
        out.tables.push_back(std::move(d));
        Table c{"C_" + stem, {"t", "C"}, {}};
        for (std::size_t i = 0; i < ts.size(); ++i) c.add({ts[i], a.kx.c_curve.estimates[i]});
        out.tables.push_back(std::move(c));
    }
    return out;
}

SuiteOutput suite_theorem_b(const ExperimentConfig& cfg, const std::vector<std::string>& spans) {
    SuiteOutput out{"theorem-b", {}, {}};
    const auto sc = sampler(cfg, std::min<std::size_t>(cfg.sample_count, 20000));

    // G index of span{1, r_1} is (2-t)/2: put all mass on one half.
    auto r = report(out.suite, "exact_indexes", cfg);
    const std::vector<double> probe{0.1, 0.3, 0.5, 0.7, 0.9};
    const auto g1 = index_curve(const_rademacher_span(1), IndexKind::G, probe, sc);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        r.checks.push_back(check_close("G_span{1,r1}[" + format_short(probe[i]) + "]",
                                       "G_X(t) = sup{int_t^inf F_f : f in X, ||f||_1 = 1}", g1.estimates[i],
                                       0.5 * (2.0 - probe[i]), 1e-3));
    }
    r.checks.push_back(check_close("G_span{1}[0.25]", "G_X(t) = (1-t)^+ for constants",
                                   g_index(constants_span(), 0.25, sc), 0.75, 1e-15));
    r.results = {{"G_const_rademacher_1", curve_json(g1)}};
    out.reports.push_back(std::move(r));

    const auto taus = cfg.tau_grid.values();
    auto all = spans.empty() ? default_theorem_spans() : spans;
    if (spans.empty()) all.push_back("constants");
    for (const auto& spec : all) {
        const auto X = parse_subspace_spec(spec);
        const auto stem = artifact_stem(X.label());
        auto b = verify_B(X, taus, sampler(cfg, std::min<std::size_t>(cfg.sample_count, 20000)), cfg.pair_count);
        auto rep = report(out.suite, "B_" + stem, cfg);
        rep.checks = b.checks;
        if (X.label() == "constants") {
            // G = (1-t)^+ gives int_0^{1/tau} G = 1/2 for tau <= 1.
            for (std::size_t i = 0; i < taus.size(); ++i) {
                if (taus[i] > 1.0) continue;
                const double closed = 768.0 * taus[i] * taus[i];
                rep.checks.push_back(check_close("B_closed_form[" + format_short(taus[i]) + "]",
                                                 "span{1}: B(tau) = K2 tau^2 / 2 = 768 tau^2", b.bound[i], closed,
                                                 0.01 * closed));
            }
        }
        const auto smooth = classify_smoothness(b.g_curve);
        rep.results = {{"subspace", X.label()},
                       {"rho_semantics", semantics(ModulusKind::rho)},
                       {"pair_count", b.rho.pair_count},
                       {"figiel_accepted", b.figiel.accepted.empty() ? 0 : b.figiel.accepted[0]},
                       {"figiel_max_residual", b.figiel.max_residual},
                       {"g_curve", curve_json(b.g_curve)},
                       {"smoothness", smoothness_json(smooth)}};
        out.reports.push_back(std::move(rep));
        Table t{"rho_" + stem, {"argument", "estimate", "bound", "margin", "figiel", "integral_G"}, {}};
        for (std::size_t i = 0; i < taus.size(); ++i) {
            t.add({taus[i], b.rho.estimates[i], b.bound[i], b.bound[i] - b.rho.estimates[i], b.figiel.estimates[i],
                   b.integral[i]});
        }
        out.tables.push_back(std::move(t));
        Table g{"G_" + stem, {"t", "G", "envelope"}, {}};
        for (std::size_t i = 0; i < b.g_curve.t_grid.size(); ++i) {
            g.add({b.g_curve.t_grid[i], b.g_curve.estimates[i], b.envelope[i]});
        }
        out.tables.push_back(std::move(g));
    }
    return out;
}

SuiteOutput suite_tail(const ExperimentConfig& cfg) {
    SuiteOutput out{"tail", {}, {}};
    const auto grid = cfg.tail_grid.text.empty() ? default_log_tail_grid() : cfg.tail_grid.values();
    const auto lt = log_weight_tail_check(grid);
    auto r = report(out.suite, "log_weight_tail", cfg);
    r.checks = lt.checks;
    r.results = {{"x0", lt.x0}, {"t0", lt.t0}, {"points", grid.size()}};
    out.reports.push_back(std::move(r));
    Table t{"log_weight_tail", {"t", "x_t", "upper_mass", "tail", "bound", "margin"}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        t.add({grid[i], lt.x_t[i], lt.upper_mass[i], lt.tail[i], lt.bound[i], lt.tail[i] - lt.bound[i]});
    }
    out.tables.push_back(std::move(t));

    const auto rg = cfg.rademacher_grid.values();
    const auto rt = rademacher_tail_check(cfg.sample_count, rg, cfg.seed, cfg.rademacher_dimension, cfg.refinement_steps);
    r = report(out.suite, "rademacher_tail", cfg);
    r.checks = rt.checks;
    r.results = {{"dimension", rt.dimension},
                 {"slope_vs_t2", rt.slope},
                 {"intercept", rt.intercept},
                 {"r_squared", rt.r_squared},
                 {"fit_window", {rt.fit_lo, rt.fit_hi}},
                 {"c1", rt.c1},
                 {"c2", rt.c2},
                 {"g_curve", curve_json(rt.g_curve)},
                 {"smoothness", smoothness_json(rt.smoothness)}};
    out.reports.push_back(std::move(r));
    Table g{"rademacher_tail", {"t", "G", "gaussian_envelope"}, {}};
    for (std::size_t i = 0; i < rg.size(); ++i) {
        g.add({rg[i], rt.g_curve.estimates[i], rt.c2 * std::exp(-0.5 * rt.c1 * rt.c1 * rg[i] * rg[i])});
    }
    out.tables.push_back(std::move(g));

    const auto w = log_weight();
    const auto tree = build_weighted_system(w, cfg.eta, cfg.depth);
    const auto wg = cfg.weighted_grid.values();
    const auto wt = weighted_tail_check(tree, w, wg, sampler(cfg, cfg.weighted_sample_count));
    r = report(out.suite, "weighted_tail", cfg);
    r.checks = wt.checks;
    r.results = {{"subspace", "weighted:logweight:" + format_short(cfg.eta) + ":" + std::to_string(cfg.depth)},
                 {"indices", tree.indices},
                 {"g_curve", curve_json(wt.g_curve)},
                 {"smoothness", smoothness_json(wt.smoothness)}};
    out.reports.push_back(std::move(r));
    Table e{"weighted_tail", {"t", "G_Ef", "tail_f", "bound"}, {}};
    for (std::size_t i = 0; i < wg.size(); ++i) e.add({wg[i], wt.g_curve.estimates[i], wt.weight_tail[i], wt.bound[i]});
    out.tables.push_back(std::move(e));
    return out;
}

SuiteOutput suite_tree(const ExperimentConfig& cfg, const std::string& weight_spec) {
    SuiteOutput out{"tree", {}, {}};
    const auto w = parse_weight_spec(weight_spec);
    const auto tree = build_weighted_system(w, cfg.eta, cfg.depth);
    const auto v = validate_tree(tree, *w, cfg.seed);

    auto r = report(out.suite, "tree", cfg);
    std::size_t nodes_ok = 0;
    for (const auto& n : v.nodes) {
        const bool ok = n.measure_ok && n.partition_ok && n.sandwich_ok && n.sign_ok;
        nodes_ok += ok ? 1 : 0;
        if (!ok) {
            r.checks.push_back(check_true("node[" + n.path + "]",
                                          "mu(A_s) = 2^-k, children split by r_{n_k}, eta 2^-k <= int_{A_s} f <= 2^-k/eta",
                                          false, n.integral, 0.0));
        }
    }
    const std::size_t expected = (std::size_t{1} << (cfg.depth + 1)) - 2;
    r.checks.push_back(check_close("nodes_validated", "every node of the dyadic tree satisfies its invariants",
                                   static_cast<double>(nodes_ok), static_cast<double>(expected), 0.0));
    double prod = 1.0;
    for (double l : tree.lambdas) prod *= l;
    r.checks.push_back(check_ge("lambda_product", "prod lambda_k >= eta", prod, cfg.eta, 1e-15));
    bool increasing = true;
    for (std::size_t i = 1; i < tree.indices.size(); ++i) increasing = increasing && tree.indices[i] > tree.indices[i - 1];
    r.checks.push_back(check_true("indices_increasing", "n_1 < n_2 < ... < n_K", increasing));
    r.checks.push_back(check_true("value_transfer",
                                  "sum a_j r_{n_j} on A_s takes the value of sum a_j r_j on I_s",
                                  leaf_basis(tree) == classical_basis(cfg.depth)));

    // Norm equivalence on seeded random coefficient vectors.
    std::size_t bad = 0;
    double lo = 1e300, hi = 0.0;
    Table ne{"norm_equivalence", {"sample", "lhs", "mid", "ratio"}, {}};
    for (std::size_t i = 0; i < 1000; ++i) {
        Rng rng(stream_seed(cfg.seed, kTagCoefficients, i));
        std::vector<double> a(static_cast<std::size_t>(cfg.depth));
        for (double& x : a) x = rng.normal();
        const auto q = norm_equivalence_check(tree, a);
        bad += q.pass ? 0 : 1;
        lo = std::min(lo, q.ratio);
        hi = std::max(hi, q.ratio);
        ne.add({static_cast<double>(i), q.lhs, q.mid, q.ratio});
    }
    r.checks.push_back(check_le("norm_equivalence_violations",
                                "eta ||sum a_j r_j||_1 <= ||sum a_j r_{n_j} f||_1 <= ||sum a_j r_j||_1 / eta",
                                static_cast<double>(bad), 0.0));
    r.checks.push_back(check_ge("ratio_min", "ratio >= eta", lo, cfg.eta));
    r.checks.push_back(check_le("ratio_max", "ratio <= 1/eta", hi, 1.0 / cfg.eta));
    r.results = tree_json(tree);
    r.results["ratio_range"] = {lo, hi};
    out.reports.push_back(std::move(r));
    out.tables.push_back(std::move(ne));

    // Control: f = 1 must reproduce the classical Rademacher system.
    const auto u = build_weighted_system(uniform_weight(), cfg.eta, cfg.depth);
    auto c = report(out.suite, "uniform_control", cfg);
    bool plain = true;
    for (int k = 1; k <= cfg.depth; ++k) {
        plain = plain && u.indices[static_cast<std::size_t>(k - 1)] == k;
        for (std::size_t s = 0; s < u.levels[static_cast<std::size_t>(k)].size(); ++s) {
            plain = plain && u.levels[static_cast<std::size_t>(k)][s].set.to_mask(k) == DyadicSet::cell(k, s);
        }
    }
    c.checks.push_back(check_true("plain_rademacher", "f = 1: n_k = k and A_s^k = I_s^k exactly", plain));
    const auto uv = validate_tree(u, *uniform_weight(), cfg.seed);
    c.checks.push_back(check_true("uniform_nodes", "all node invariants for f = 1", uv.pass));
    c.results = tree_json(u);
    out.reports.push_back(std::move(c));

    // Root splits: exact halves for f = 1, lambda bounds for the chosen weight.
    auto s = report(out.suite, "split", cfg);
    const auto su = split_set(DyadicSet::full(), *uniform_weight(), 0.9, 1);
    s.checks.push_back(check_close("uniform_split_A0", "f = 1 halves exactly", su.integral_A0, 0.5, 0.0));
    s.checks.push_back(check_close("uniform_split_A1", "f = 1 halves exactly", su.integral_A1, 0.5, 0.0));
    const auto sl = split_set(DyadicSet::full(), *w, 0.9, 1);
    for (const auto* name : {"A0", "A1"}) {
        const double v0 = std::string(name) == "A0" ? sl.integral_A0 : sl.integral_A1;
        s.checks.push_back(check_ge(std::string("split_lower_") + name, "(lambda/2) int_A g <= int_{A_i} g", v0,
                                    0.45 * sl.integral_A, 1e-12));
        s.checks.push_back(check_le(std::string("split_upper_") + name, "int_{A_i} g <= int_A g / (2 lambda)", v0,
                                    sl.integral_A / 1.8, 1e-12));
    }
    s.results = {{"weight", w->name()},
                 {"chosen_n", sl.chosen_n},
                 {"integral_A0", sl.integral_A0},
                 {"integral_A1", sl.integral_A1},
                 {"certificate", sl.certificate}};
    out.reports.push_back(std::move(s));
    return out;
}

SuiteOutput run_suite(const std::string& name, const ExperimentConfig& cfg, const std::vector<std::string>& spans) {
    if (name == "orlicz") return suite_orlicz(cfg);
    if (name == "lemma") return suite_lemma(cfg);
    if (name == "theorem-a") return suite_theorem_a(cfg, spans);
    if (name == "theorem-b") return suite_theorem_b(cfg, spans);
    if (name == "tail") return suite_tail(cfg);
    if (name == "tree") return suite_tree(cfg);
    throw SpecError("unknown suite '" + name + "'");
}

}  // namespace renorm
