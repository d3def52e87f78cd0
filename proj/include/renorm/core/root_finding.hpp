#pragma once

#include <cmath>
#include <stdexcept>

namespace renorm {

struct BisectionResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bisection for a sign change of g on [lo, hi]. Stops when |g| <= value_tol or
/// the bracket collapses to adjacent doubles (or width <= x_tol).
template <class G>
BisectionResult bisect(G&& g, double lo, double hi, double value_tol, double x_tol = 0.0, int max_iter = 400) {
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) return {lo, 0.0, 0};
    if (ghi == 0.0) return {hi, 0.0, 0};
    if ((glo > 0) == (ghi > 0)) throw BracketError("bisect: no sign change on bracket");
    BisectionResult r;
    for (r.iterations = 1; r.iterations <= max_iter; ++r.iterations) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (std::abs(gm) <= value_tol || !(mid > lo && mid < hi) || hi - lo <= x_tol) {
            r.root = mid;
            r.residual = gm;
            return r;
        }
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    r.root = 0.5 * (lo + hi);
    r.residual = g(r.root);
    return r;
}

/// Bisection in log-space for strictly positive brackets spanning many decades.
template <class G>
BisectionResult bisect_log(G&& g, double lo, double hi, double value_tol, int max_iter = 400) {
    auto h = [&](double u) { return g(std::exp(u)); };
    auto r = bisect(h, std::log(lo), std::log(hi), value_tol, 0.0, max_iter);
    r.root = std::exp(r.root);
    return r;
}

}  // namespace renorm
