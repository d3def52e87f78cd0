#include "renorm/report/artifacts.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "renorm/orlicz/orlicz.hpp"
#include "renorm/report/format.hpp"

namespace renorm {

void Table::add(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_real(v));
    rows.push_back(std::move(cells));
}

void Table::add_cells(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

nlohmann::json to_json(const Check& c) {
    return {{"name", c.name},  {"paper_anchor", c.paper_anchor}, {"relation", c.relation},
            {"lhs", c.lhs},    {"rhs", c.rhs},                   {"margin", c.margin},
            {"pass", c.pass}};
}

nlohmann::json to_json(const VerificationReport& r) {
    const auto& nc = norm_equivalence_constants();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"suite", r.suite},
            {"name", r.name},
            {"constants", {{"k", nc.k}, {"C", nc.C}, {"K1", nc.K1}, {"K2", nc.K2}}},
            {"config", r.config},
            {"results", r.results},
            {"checks", checks},
            {"pass", r.pass()}};
}

bool SuiteOutput::pass() const {
    for (const auto& r : reports) {
        if (!r.pass()) return false;
    }
    return true;
}

std::size_t SuiteOutput::check_count() const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.checks.size();
    return n;
}

std::size_t SuiteOutput::failed_count() const {
    std::size_t n = 0;
    for (const auto& r : reports) {
        for (const auto& c : r.checks) n += c.pass ? 0 : 1;
    }
    return n;
}

void write_csv(std::ostream& out, const Table& t) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
}

std::vector<std::string> write_suite(const SuiteOutput& s, const std::string& output_dir) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(output_dir) / s.suite;
    fs::create_directories(dir);
    std::vector<std::string> written;
    auto open = [&](const fs::path& p) {
        std::ofstream f(p, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
        written.push_back(p.string());
        return f;
    };
    for (const auto& r : s.reports) {
        auto f = open(dir / (r.name + ".json"));
        f << to_json(r).dump(2) << '\n';
    }
    for (const auto& t : s.tables) {
        auto f = open(dir / (t.name + ".csv"));
        write_csv(f, t);
    }
    return written;
}

void print_summary(std::ostream& out, const SuiteOutput& s) {
    for (const auto& r : s.reports) {
        std::size_t failed = 0;
        for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
        out << (failed ? "FAIL " : "pass ") << s.suite << '/' << r.name << "  (" << r.checks.size() - failed << '/'
            << r.checks.size() << " checks)\n";
        for (const auto& c : r.checks) {
            if (!c.pass) {
                out << "    failed: " << c.name << "  " << format_real(c.lhs) << ' ' << c.relation << ' '
                    << format_real(c.rhs) << "  [" << c.paper_anchor << "]\n";
            }
        }
    }
}

}  // namespace renorm
