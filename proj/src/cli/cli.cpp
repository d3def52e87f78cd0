#include "renorm/cli/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "renorm/cli/specs.hpp"
#include "renorm/cli/suites.hpp"
#include "renorm/orlicz/luxemburg.hpp"
#include "renorm/report/format.hpp"
#include "renorm/subspace/moduli.hpp"
#include "renorm/subspace/sampling.hpp"

namespace renorm {

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples, pairs, weighted_samples;
    std::optional<int> refine, grid_points, step_level, depth, dimension;
    std::optional<double> tolerance, quad_tolerance, eta;
    std::optional<std::string> t_grid, eps_grid, tau_grid, g_grid, output_dir;
};

void add_common(CLI::App* app, Overrides& o) {
    app->add_option("--config", o.config_path, "flat JSON config file");
    app->add_option("--seed", o.seed);
    app->add_option("--samples", o.samples, "sphere samples per index estimate");
    app->add_option("--pairs", o.pairs, "pairs per modulus argument");
    app->add_option("--weighted-samples", o.weighted_samples);
    app->add_option("--refine", o.refine, "refinement steps");
    app->add_option("--grid-points", o.grid_points);
    app->add_option("--step-level", o.step_level);
    app->add_option("--tolerance", o.tolerance, "scalar tolerance");
    app->add_option("--quad-tolerance", o.quad_tolerance);
    app->add_option("--t-grid", o.t_grid, "linear:min:max:n | log:min:max:n | list:a,b,...");
    app->add_option("--eps-grid", o.eps_grid);
    app->add_option("--tau-grid", o.tau_grid);
    app->add_option("--g-grid", o.g_grid);
    app->add_option("--output-dir", o.output_dir);
}

ExperimentConfig resolve(const Overrides& o) {
    ExperimentConfig c = o.config_path.empty() ? ExperimentConfig{} : load_config(o.config_path);
    if (o.seed) c.seed = *o.seed;
    if (o.samples) c.sample_count = *o.samples;
    if (o.pairs) c.pair_count = *o.pairs;
    if (o.weighted_samples) c.weighted_sample_count = *o.weighted_samples;
    if (o.refine) c.refinement_steps = *o.refine;
    if (o.grid_points) c.grid_points = *o.grid_points;
    if (o.step_level) c.step_level = *o.step_level;
    if (o.tolerance) c.tolerance_scalar = *o.tolerance;
    if (o.quad_tolerance) c.tolerance_quadrature = *o.quad_tolerance;
    if (o.t_grid) c.t_grid = parse_grid(*o.t_grid);
    if (o.eps_grid) c.epsilon_grid = parse_grid(*o.eps_grid);
    if (o.tau_grid) c.tau_grid = parse_grid(*o.tau_grid);
    if (o.g_grid) c.g_grid = parse_grid(*o.g_grid);
    if (o.output_dir) c.output_dir = *o.output_dir;
    if (o.eta) c.eta = *o.eta;
    if (o.depth) c.depth = *o.depth;
    if (o.dimension) c.rademacher_dimension = *o.dimension;
    c.validate();
    return c;
}

int finish(const SuiteOutput& s, const ExperimentConfig& cfg, std::ostream& out) {
    write_suite(s, cfg.output_dir);
    print_summary(out, s);
    return s.pass() ? kExitPass : kExitFinding;
}

int cmd_norm(const std::string& fn, const ExperimentConfig& cfg, std::ostream& out) {
    const auto f = parse_function_spec(fn, cfg.tolerance_quadrature);
    const auto sol = luxemburg_norm(f.function, cfg.tolerance_scalar);
    const double l1 = l1_norm(f.function);
    out << "function       " << f.label << "\n";
    out << "luxemburg_norm " << format_real(sol.lambda) << "\n";
    out << "l1_norm        " << format_real(l1) << "\n";
    out << "modular_residual " << format_real(std::abs(sol.modular_at_lambda - 1.0)) << "\n";
    out << "iterations     " << sol.iterations << "\n";
    return kExitPass;
}

int cmd_indexes(const std::string& spec, const std::string& which, const ExperimentConfig& cfg, std::ostream& out) {
    if (which != "C" && which != "G") throw SpecError("--which must be C or G");
    const auto X = parse_subspace_spec(spec);
    const auto kind = which == "C" ? IndexKind::C : IndexKind::G;
    const auto grid = kind == IndexKind::C ? cfg.t_grid.values() : cfg.g_grid.values();
    const auto curve = index_curve(X, kind, grid, sampler(cfg, cfg.sample_count));

    SuiteOutput s{"indexes", {}, {}};
    const auto stem = which + "_" + artifact_stem(X.label());
    VerificationReport r{s.suite, stem, {}, echo(cfg), {}};
    bool monotone = true;
    for (std::size_t i = 1; i < curve.estimates.size(); ++i) monotone = monotone && curve.estimates[i] <= curve.estimates[i - 1];
    r.checks.push_back(check_true("nonincreasing", which + "_X is nonincreasing in t", monotone));
    r.results = {{"subspace", X.label()}, {"curve", curve_json(curve)}};
    if (kind == IndexKind::G) r.results["smoothness"] = smoothness_json(classify_smoothness(curve));
    s.reports.push_back(std::move(r));
    Table t{stem, {"t", which}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) t.add({grid[i], curve.estimates[i]});
    s.tables.push_back(std::move(t));
    return finish(s, cfg, out);
}

int cmd_moduli(const std::string& spec, const std::string& kind, const ExperimentConfig& cfg, std::ostream& out) {
    const auto X = parse_subspace_spec(spec);
    SuiteOutput s{"moduli", {}, {}};
    const auto stem = kind + "_" + artifact_stem(X.label());
    VerificationReport r{s.suite, stem, {}, echo(cfg), {}};
    if (kind == "delta") {
        const auto eps = cfg.epsilon_grid.values();
        const auto a = verify_A(X, eps, cfg.t_grid.values(), sampler(cfg, cfg.sample_count), cfg.pair_count);
        r.checks = a.checks;
        r.results = {{"subspace", X.label()}, {"K_X", a.kx.value}, {"semantics", semantics(ModulusKind::delta)}};
        Table t{stem, {"argument", "estimate", "K_X", "bound", "margin"}, {}};
        for (std::size_t i = 0; i < eps.size(); ++i) {
            t.add({eps[i], a.delta.estimates[i], a.kx.value, a.bound[i], a.delta.estimates[i] - a.bound[i]});
        }
        s.tables.push_back(std::move(t));
    } else if (kind == "rho" || kind == "rho_figiel") {
        const auto taus = cfg.tau_grid.values();
        const auto b = verify_B(X, taus, sampler(cfg, std::min<std::size_t>(cfg.sample_count, 20000)), cfg.pair_count);
        r.checks = b.checks;
        const auto& est = kind == "rho" ? b.rho : b.figiel;
        const double factor = kind == "rho" ? 1.0 : 16.0;
        r.results = {{"subspace", X.label()},
                     {"semantics", semantics(kind == "rho" ? ModulusKind::rho : ModulusKind::rho_figiel)}};
        Table t{stem, {"argument", "estimate", "integral_G", "bound", "margin"}, {}};
        for (std::size_t i = 0; i < taus.size(); ++i) {
            const double lhs = factor * est.estimates[i];
            t.add({taus[i], est.estimates[i], b.integral[i], b.bound[i], b.bound[i] - lhs});
        }
        s.tables.push_back(std::move(t));
    } else {
        throw SpecError("--kind must be delta, rho or rho_figiel");
    }
    s.reports.push_back(std::move(r));
    return finish(s, cfg, out);
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& spans, const ExperimentConfig& cfg,
               std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = kSuiteNames;
    } else if (std::find(kSuiteNames.begin(), kSuiteNames.end(), suite) != kSuiteNames.end()) {
        names = {suite};
    } else {
        throw SpecError("unknown suite '" + suite + "'");
    }
    for (const auto& s : spans) parse_subspace_spec(s);  // fail fast with exit 2

    bool pass = true;
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& n : names) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto s = run_suite(n, cfg, spans);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_suite(s, cfg.output_dir);
        print_summary(out, s);
        err << "[time] " << n << " " << format_short(secs) << " s\n";
        pass = pass && s.pass();
        summary.push_back({{"suite", n}, {"checks", s.check_count()}, {"failed", s.failed_count()}, {"pass", s.pass()}});
    }
    if (names.size() > 1) {
        const auto dir = std::filesystem::path(cfg.output_dir) / "all";
        std::filesystem::create_directories(dir);
        std::ofstream f(dir / "summary.json");
        f << nlohmann::json{{"suites", summary}, {"pass", pass}, {"config", echo(cfg)}}.dump(2) << "\n";
        out << (pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    }
    return pass ? kExitPass : kExitFinding;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orlicz renorming of L1: norms, subspace indexes, moduli and verification suites"};
    app.require_subcommand(1);
    Overrides o;

    auto* norm = app.add_subcommand("norm", "Luxemburg norm of one function");
    std::string fn;
    norm->add_option("--fn", fn, "constant c | indicator a b h | rademacher n | logweight | step CSV path")->required();
    add_common(norm, o);

    auto* idx = app.add_subcommand("indexes", "C or G index curve of a subspace");
    std::string span, which = "G";
    idx->add_option("--subspace", span)->required();
    idx->add_option("--which", which, "C or G");
    add_common(idx, o);

    auto* mod = app.add_subcommand("moduli", "delta / rho / Figiel rho curve with its bound");
    std::string kind = "delta";
    mod->add_option("--subspace", span)->required();
    mod->add_option("--kind", kind, "delta | rho | rho_figiel");
    add_common(mod, o);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::vector<std::string> spans;
    ver->add_option("suite", suite, "orlicz | lemma | theorem-a | theorem-b | tail | tree | all")->required();
    ver->add_option("--subspace", spans, "subspaces for the theorem suites (repeatable)");
    add_common(ver, o);

    auto* tree = app.add_subcommand("tree", "build and validate a weighted Rademacher tree");
    std::string weight = "logweight";
    tree->add_option("--weight", weight, "logweight | uniform | power:a");
    tree->add_option("--eta", o.eta);
    tree->add_option("--depth", o.depth);
    add_common(tree, o);

    auto* tail = app.add_subcommand("tail", "tail-bound checks");
    tail->add_option("--dimension", o.dimension, "Rademacher span dimension");
    tail->add_option("--eta", o.eta);
    tail->add_option("--depth", o.depth);
    add_common(tail, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }

    try {
        const auto cfg = resolve(o);
        const auto t0 = std::chrono::steady_clock::now();
        int code = kExitPass;
        if (*norm) {
            code = cmd_norm(fn, cfg, out);
        } else if (*idx) {
            code = cmd_indexes(span, which, cfg, out);
        } else if (*mod) {
            code = cmd_moduli(span, kind, cfg, out);
        } else if (*ver) {
            code = cmd_verify(suite, spans, cfg, out, err);
        } else if (*tree) {
            code = finish(suite_tree(cfg, weight), cfg, out);
        } else if (*tail) {
            code = finish(suite_tail(cfg), cfg, out);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        err << "[time] total " << format_short(secs) << " s\n";
        return code;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecError& e) {
        err << "spec error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateBasis& e) {
        err << "spec error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "finding: " << e.what() << "\n";
        return kExitFinding;
    }
}

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace renorm
