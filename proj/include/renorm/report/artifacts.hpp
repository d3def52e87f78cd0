#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "renorm/report/check.hpp"

namespace renorm {

/// CSV table: header row plus rows of preformatted cells.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(const std::vector<double>& values);
    void add_cells(std::vector<std::string> cells);
};

/// One JSON artifact: a named group of checks with their context. Wall-clock
/// timing is printed by the CLI but never stored, so reruns are byte-identical.
struct VerificationReport {
    std::string suite;
    std::string name;
    std::vector<Check> checks;
    nlohmann::json config;
    nlohmann::json results = nlohmann::json::object();

    bool pass() const { return all_pass(checks); }
};

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const VerificationReport& r);

struct SuiteOutput {
    std::string suite;
    std::vector<VerificationReport> reports;
    std::vector<Table> tables;

    bool pass() const;
    std::size_t check_count() const;
    std::size_t failed_count() const;
};

void write_csv(std::ostream& out, const Table& t);

/// Writes output_dir/suite/{name}.json and {name}.csv; returns the paths.
std::vector<std::string> write_suite(const SuiteOutput& s, const std::string& output_dir);

/// One line per report plus one per failed check.
void print_summary(std::ostream& out, const SuiteOutput& s);

}  // namespace renorm
