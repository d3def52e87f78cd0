// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "renorm/cli/cli.hpp"
#include "renorm/lab/tail_checks.hpp"
#include "renorm/lab/weighted_tree.hpp"
#include "renorm/orlicz/properties.hpp"
#include "renorm/report/config.hpp"
#include "renorm/report/format.hpp"
#include "renorm/subspace/indexes.hpp"
#include "renorm/subspace/verify.hpp"

using namespace renorm;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string s(double v) { return format_short(v); }

const std::vector<std::string> kSpans{"rademacher:2", "rademacher:3", "rademacher:4"};

Subspace span_of(const std::string& name) {
    if (name == "rademacher:2") return rademacher_span(2);
    if (name == "rademacher:3") return rademacher_span(3);
    if (name == "rademacher:4") return rademacher_span(4);
    if (name == "constants") return constants_span();
    return const_rademacher_span(1);
}

SamplerConfig sampler(std::size_t n) {
    SamplerConfig c;
    c.seed = 1;
    c.sample_count = n;
    return c;
}

Outcome c1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = closed_form_vs_quadrature(10000, 100.0);
    const double secs = seconds_since(t0);
    return {r.max_rel_error <= 1e-10 && secs < 5.0,
            "max rel error " + s(r.max_rel_error) + " over " + std::to_string(r.points) + " points, " + s(secs) + " s"};
}

Outcome c2() {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 0, bad = 0;
    for (const auto& st : lemma_two_sided(1000000, 1)) {
        n += st.samples;
        bad += st.violations;
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && secs < 30.0,
            std::to_string(bad) + " violations in " + std::to_string(n) + " evaluations, " + s(secs) + " s"};
}

Outcome c3() {
    std::string d;
    bool ok = true;
    for (const auto& st : pointwise_inequalities(1000000, 1)) {
        ok = ok && st.violations == 0 && st.samples >= 1000000;
        d += st.name + " " + std::to_string(st.violations) + "/" + std::to_string(st.samples) + "; ";
    }
    return {ok, d};
}

Outcome c4() {
    const auto st = luxemburg_solver_checks(1000, 16, 1, 1e-10);
    const bool ok = st.max_residual <= 1e-10 && st.sandwich_violations == 0 && st.norm_of_one == 1.0 &&
                    std::abs(st.norm_two_chi - st.oracle_two_chi) <= 1e-8;
    return {ok, "residual " + s(st.max_residual) + ", sandwich violations " + std::to_string(st.sandwich_violations) +
                    ", ||1|| = " + format_real(st.norm_of_one) + ", ||2chi|| " + format_real(st.norm_two_chi) +
                    " vs oracle " + format_real(st.oracle_two_chi)};
}

Outcome c5() {
    const std::vector<double> ts{0.1, 0.3, 0.5, 0.7, 0.9};
    const auto X = const_rademacher_span(1);
    const auto C = index_curve(X, IndexKind::C, ts, sampler(2000));
    const auto G = index_curve(X, IndexKind::G, ts, sampler(2000));
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        worst = std::max(worst, std::abs(C.estimates[i] - 0.5));
        worst = std::max(worst, std::abs(G.estimates[i] - (2.0 - ts[i]) / 2.0));
    }
    return {worst <= 1e-3, "max |estimate - exact| " + s(worst) + " (sweep of " + std::to_string(C.pool_size) +
                               " points, grid modulus " + s(C.grid_modulus) + ")"};
}

Outcome c6() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string d;
    for (const auto& name : kSpans) {
        const auto X = span_of(name);
        const auto a = verify_A(X, {0.25, 0.5, 1.0, 1.5, 2.0}, {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95},
                                sampler(100000), 10000);
        double min_ratio = 1e300;
        for (std::size_t i = 0; i < a.bound.size(); ++i) min_ratio = std::min(min_ratio, a.delta.estimates[i] / a.bound[i]);
        ok = ok && all_pass(a.checks) && !a.vacuous;
        d += name + " K_X " + s(a.kx.value) + " min delta/bound " + s(min_ratio) + "; ";
    }
    const double secs = seconds_since(t0);
    ok = ok && secs < 300.0;
    return {ok, d + s(secs) + " s"};
}

Outcome c7() {
    bool ok = true;
    std::string d;
    auto spans = kSpans;
    spans.push_back("const-rademacher:1");
    spans.push_back("constants");
    const std::vector<double> taus{0.05, 0.1, 0.2, 0.5, 1.0};
    for (const auto& name : spans) {
        const auto b = verify_B(span_of(name), taus, sampler(20000), 10000);
        ok = ok && all_pass(b.checks);
        if (name == "constants") {
            double worst = 0.0;
            for (std::size_t i = 0; i < taus.size(); ++i) {
                const double closed = 768.0 * taus[i] * taus[i];
                worst = std::max(worst, std::abs(b.bound[i] - closed) / closed);
            }
            ok = ok && worst <= 0.01;
            d += "span{1} B vs 768 tau^2 rel err " + s(worst);
        } else {
            double min_margin = 1e300;
            for (std::size_t i = 0; i < taus.size(); ++i) min_margin = std::min(min_margin, b.bound[i] - b.rho.estimates[i]);
            d += name + " min margin " + s(min_margin) + "; ";
        }
    }
    return {ok, d};
}

Outcome c8() {
    const auto w = log_weight();
    const auto tree = build_weighted_system(w, 0.9, 5);
    const auto v = validate_tree(tree, *w, 1);
    std::size_t good = 0;
    for (const auto& n : v.nodes) good += (n.measure_ok && n.partition_ok && n.sandwich_ok && n.sign_ok) ? 1 : 0;
    std::size_t bad = 0;
    double lo = 1e300, hi = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) {
        Rng rng(stream_seed(1, 0x414343ULL, i));
        std::vector<double> a(5);
        for (double& x : a) x = rng.normal();
        const auto q = norm_equivalence_check(tree, a);
        bad += q.pass ? 0 : 1;
        lo = std::min(lo, q.ratio);
        hi = std::max(hi, q.ratio);
    }
    const auto u = build_weighted_system(uniform_weight(), 0.9, 5);
    bool plain = leaf_basis(u) == classical_basis(5);
    for (int k = 1; k <= 5; ++k) plain = plain && u.indices[static_cast<std::size_t>(k - 1)] == k;
    std::string idx;
    for (int n : tree.indices) idx += std::to_string(n) + " ";
    const bool ok = good == 62 && v.nodes.size() == 62 && bad == 0 && lo >= 0.9 && hi <= 1.0 / 0.9 && plain;
    return {ok, std::to_string(good) + "/62 nodes, indices " + idx + "ratios [" + s(lo) + ", " + s(hi) +
                    "], uniform control " + (plain ? "exact" : "differs")};
}

Outcome c9() {
    const auto grid = default_log_tail_grid(50);
    const auto r = log_weight_tail_check(grid);
    std::size_t failed = 0;
    for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
    double min_ratio = 1e300;
    for (std::size_t i = 0; i < grid.size(); ++i) min_ratio = std::min(min_ratio, r.tail[i] / r.bound[i]);
    return {failed == 0 && grid.size() == 50 && grid.front() >= 10.0 && grid.back() == 1e4,
            std::to_string(failed) + " violations of " + std::to_string(r.checks.size()) + " checks on [" +
                s(grid.front()) + ", " + s(grid.back()) + "], t0 " + s(r.t0) + ", min tail/bound " + s(min_ratio)};
}

Outcome c10() {
    std::vector<double> rg;
    for (int i = 1; i <= 40; ++i) rg.push_back(0.1 * i);
    const auto r = rademacher_tail_check(100000, rg, 1, 8, 3);
    const bool rad = r.slope < 0.0 && r.r_squared >= 0.95 && r.smoothness.regime == Regime::power_2;

    const auto w = log_weight();
    const auto tree = build_weighted_system(w, 0.9, 5);
    const auto wg = parse_grid("log:1:10000:50").values();
    auto sc = sampler(2000);
    const auto e = weighted_tail_check(tree, w, wg, sc);
    const bool ef = e.smoothness.regime == Regime::none && all_pass(e.checks) &&
                    e.smoothness.diagnostic.find("sub-polynomial") != std::string::npos;
    return {rad && ef, "R8 slope " + s(r.slope) + " R^2 " + s(r.r_squared) + " regime " + to_string(r.smoothness.regime) +
                           "; E_f regime " + to_string(e.smoothness.regime) + " (" + e.smoothness.diagnostic + ")"};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome c11() {
    const auto base = fs::temp_directory_path() / "renorm_acceptance";
    fs::remove_all(base);
    std::vector<fs::path> dirs{base / "run1", base / "run2"};
    int codes[2];
    for (int i = 0; i < 2; ++i) {
        const std::string out = dirs[static_cast<std::size_t>(i)].string();
        const char* argv[] = {"renorm", "verify", "all", "--seed", "42", "--output-dir", out.c_str()};
        std::ostringstream sink, err;
        codes[i] = run_cli(7, argv, sink, err);
    }
    std::size_t files = 0, differing = 0;
    for (const auto& e : fs::recursive_directory_iterator(dirs[0])) {
        if (!e.is_regular_file()) continue;
        ++files;
        const auto other = dirs[1] / fs::relative(e.path(), dirs[0]);
        if (!fs::exists(other) || slurp(e.path()) != slurp(other)) ++differing;
    }
    std::size_t files2 = 0;
    for (const auto& e : fs::recursive_directory_iterator(dirs[1])) files2 += e.is_regular_file() ? 1 : 0;
    fs::remove_all(base);
    const bool ok = files > 0 && files == files2 && differing == 0;
    return {ok, std::to_string(files) + " artifacts, " + std::to_string(differing) + " differ (exit codes " +
                    std::to_string(codes[0]) + ", " + std::to_string(codes[1]) + ")"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"closed-form M vs quadrature", c1},
        {"midpoint lemma two-sided inequality", c2},
        {"pointwise inequalities", c3},
        {"Luxemburg solver", c4},
        {"exact index values span{1,r1}", c5},
        {"convexity bound delta >= K_X eps^2", c6},
        {"smoothness bound rho <= K2 tau^2 int G", c7},
        {"weighted tree and norm equivalence", c8},
        {"log weight tail bound", c9},
        {"tail classifier", c10},
        {"determinism of verify all --seed 42", c11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s criterion %zu: %s | %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
