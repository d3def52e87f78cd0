#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace renorm {

/// One asserted relation. margin > 0 means the relation holds with room to
/// spare; anchor names the inequality being tested.
struct Check {
    std::string name;
    std::string paper_anchor;
    std::string relation;  // ">=", "<=", "==" or "info"
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
};

inline Check check_ge(std::string name, std::string anchor, double lhs, double rhs, double slack = 0.0) {
    return {std::move(name), std::move(anchor), ">=", lhs, rhs, lhs - rhs, lhs >= rhs - slack};
}

inline Check check_le(std::string name, std::string anchor, double lhs, double rhs, double slack = 0.0) {
    return {std::move(name), std::move(anchor), "<=", lhs, rhs, rhs - lhs, lhs <= rhs + slack};
}

/// |lhs - rhs| <= tol; margin is tol - |lhs - rhs|.
inline Check check_close(std::string name, std::string anchor, double lhs, double rhs, double tol) {
    const double gap = std::abs(lhs - rhs);
    return {std::move(name), std::move(anchor), "==", lhs, rhs, tol - gap, gap <= tol};
}

inline Check check_true(std::string name, std::string anchor, bool ok, double lhs = 0.0, double rhs = 0.0) {
    return {std::move(name), std::move(anchor), "holds", lhs, rhs, ok ? 1.0 : -1.0, ok};
}

inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

}  // namespace renorm
