#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "renorm/cli/cli.hpp"
#include "renorm/cli/specs.hpp"

using namespace renorm;

namespace {

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "renorm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    return rc;
}

std::string tmpdir(const std::string& name) {
    const auto d = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(d);
    return d.string();
}

}  // namespace

TEST_CASE("norm command") {
    std::string out;
    CHECK(run({"norm", "--fn", "constant 1"}, &out) == 0);
    CHECK(out.find("luxemburg_norm 1\n") != std::string::npos);
    CHECK(run({"norm", "--fn", "indicator 0 0.5 2"}, &out) == 0);
    CHECK(out.find("luxemburg_norm 1.40662") != std::string::npos);
    CHECK(run({"norm", "--fn", "logweight"}) == 0);
}

TEST_CASE("usage, spec and config errors exit 2") {
    CHECK(run({}) == 2);
    CHECK(run({"norm"}) == 2);
    CHECK(run({"norm", "--fn", "indicator 0 0.3 1"}) == 2);
    CHECK(run({"norm", "--fn", "wibble"}) == 2);
    CHECK(run({"verify", "nosuch"}) == 2);
    CHECK(run({"indexes", "--subspace", "rademacher:0"}) == 2);
    CHECK(run({"verify", "tree", "--t-grid", "list:1,0"}) == 2);
    CHECK(run({"verify", "tree", "--config", "/nonexistent/config.json"}) == 2);
    CHECK(run({"moduli", "--subspace", "rademacher:2", "--kind", "gamma"}) == 2);
}

TEST_CASE("a failed check exits 1") {
    // eta so close to 1 that the norm-equivalence ratio band is tiny: the
    // run must either pass every check or report a finding, never a usage error.
    const int rc = run({"tree", "--eta", "0.999999", "--depth", "2", "--output-dir", tmpdir("renorm_cli_eta")});
    CHECK((rc == 0 || rc == 1));
}

TEST_CASE("tree and indexes write artifacts") {
    const auto dir = tmpdir("renorm_cli_artifacts");
    CHECK(run({"tree", "--depth", "3", "--output-dir", dir}) == 0);
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / "tree" / "tree.json"));
    CHECK(run({"indexes", "--subspace", "rademacher:3", "--which", "G", "--samples", "500", "--output-dir", dir}) == 0);
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / "indexes" / "G_rademacher_3.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("subspace specs") {
    CHECK(parse_subspace_spec("rademacher:4").dim() == 4);
    CHECK(parse_subspace_spec("const-rademacher:2").dim() == 3);
    CHECK(parse_subspace_spec("constants").dim() == 1);
    CHECK(parse_subspace_spec("weighted:logweight:0.9:3").dim() == 3);
    CHECK_THROWS_AS(parse_subspace_spec("rademacher:-1"), SpecError);
    CHECK_THROWS_AS(parse_subspace_spec("weighted:logweight:1.5:3"), SpecError);
    CHECK_THROWS_AS(parse_weight_spec("power:-3"), SpecError);
}
