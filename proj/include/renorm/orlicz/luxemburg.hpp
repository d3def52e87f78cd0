#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace renorm {

struct NormSolution {
    double lambda = 0.0;
    double modular_at_lambda = 0.0;
    int iterations = 0;
    double tolerance = 0.0;
};

class BracketFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultScalarTolerance = 1e-10;
inline constexpr double kDefaultQuadratureTolerance = 1e-8;

/// Luxemburg norm from a modular lambda -> int M(f/lambda). Bisection on
/// [l1, 6 l1]: Jensen gives modular(l1) >= 1 and M(t) <= 6|t| gives
/// modular(6 l1) <= 1. Stops when |modular - 1| <= tolerance or when the
/// bracket can no longer be split; tolerance 0 therefore means full double
/// precision.
template <class Modular>
NormSolution solve_luxemburg(Modular&& modular, double l1, double tolerance) {
    NormSolution out;
    out.tolerance = tolerance;
    if (!(l1 > 0.0)) return out;  // f = 0 by convention
    double lo = l1;
    double hi = 6.0 * l1;
    const double mlo = modular(lo);
    const double mhi = modular(hi);
    const double slack = tolerance + 1e-12;
    if (mlo < 1.0 - slack || mhi > 1.0 + slack) {
        throw BracketFailure("luxemburg: modular does not bracket 1 (" + std::to_string(mlo) + ", " +
                             std::to_string(mhi) + ")");
    }
    if (std::abs(mlo - 1.0) <= tolerance) return {lo, mlo, 0, tolerance};
    if (std::abs(mhi - 1.0) <= tolerance) return {hi, mhi, 0, tolerance};
    double m_hi = mhi, m_lo = mlo;
    for (int it = 1; it <= 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            out.iterations = it;
            if (std::abs(m_hi - 1.0) <= std::abs(m_lo - 1.0)) {
                out.lambda = hi;
                out.modular_at_lambda = m_hi;
            } else {
                out.lambda = lo;
                out.modular_at_lambda = m_lo;
            }
            return out;
        }
        const double m = modular(mid);
        if (std::abs(m - 1.0) <= tolerance) return {mid, m, it, tolerance};
        if (m > 1.0) {
            lo = mid;
            m_lo = m;
        } else {
            hi = mid;
            m_hi = m;
        }
    }
    throw BracketFailure("luxemburg: bisection did not terminate");
}

}  // namespace renorm
