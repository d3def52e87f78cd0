#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "renorm/report/artifacts.hpp"
#include "renorm/report/config.hpp"
#include "renorm/report/format.hpp"

using namespace renorm;

TEST_CASE("grid specs") {
    CHECK(parse_grid("linear:0:1:5").values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const auto lg = parse_grid("log:1:100:3").values();
    CHECK(lg[1] == doctest::Approx(10.0));
    CHECK(lg.back() == 100.0);
    CHECK(parse_grid("list:0.5,1,2").values() == std::vector<double>{0.5, 1.0, 2.0});
    CHECK_THROWS_AS(parse_grid("list:2,1").values(), ConfigError);
    CHECK_THROWS_AS(parse_grid("cubic:0:1:3").values(), ConfigError);
    CHECK_THROWS_AS(parse_grid("log:0:1:3").values(), ConfigError);
}

TEST_CASE("config: defaults, overlay, validation") {
    ExperimentConfig c;
    CHECK_NOTHROW(c.validate());
    apply_json(c, nlohmann::json{{"seed", 42}, {"step_level", 12}, {"t_grid", "list:0.5"}});
    CHECK(c.seed == 42);
    CHECK(c.step_level == 12);
    CHECK_THROWS_AS(apply_json(c, nlohmann::json{{"nope", 1}}), ConfigError);
    c.step_level = 25;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.step_level = 16;
    c.tolerance_scalar = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("config JSON round trip") {
    ExperimentConfig c;
    c.seed = 7;
    c.tau_grid = parse_grid("list:0.1,0.2");
    ExperimentConfig d;
    apply_json(d, to_json(c));
    CHECK(to_json(d) == to_json(c));
}

TEST_CASE("reals print with 17 significant digits") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("CSV and JSON artifacts") {
    Table t{"demo", {"a", "b"}, {}};
    t.add({1.0, 0.5});
    std::ostringstream os;
    write_csv(os, t);
    CHECK(os.str() == "a,b\n1,0.5\n");

    SuiteOutput s{"demo", {}, {t}};
    VerificationReport r{"demo", "r", {check_le("x", "x <= 1", 0.5, 1.0)}, nlohmann::json::object(), {}};
    s.reports.push_back(r);
    CHECK(s.pass());
    const auto dir = std::filesystem::temp_directory_path() / "renorm_report_test";
    std::filesystem::remove_all(dir);
    write_suite(s, dir.string());
    std::ifstream in(dir / "demo" / "r.json");
    const auto j = nlohmann::json::parse(in);
    CHECK(j["checks"][0]["paper_anchor"] == "x <= 1");
    CHECK(j["checks"][0]["margin"] == 0.5);
    CHECK(j.contains("constants"));
    CHECK(std::filesystem::exists(dir / "demo" / "demo.csv"));
    std::filesystem::remove_all(dir);
}
