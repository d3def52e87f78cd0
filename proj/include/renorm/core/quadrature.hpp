#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace renorm {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

class NonIntegrableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Kronrod 15-point abscissae/weights with the embedded 7-point Gauss rule.
inline constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                   0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                   0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
                                   0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                   0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                   0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                   0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature. Bisects the segment with
/// the largest error estimate until the total estimate meets
/// max(abs_tol, rel_tol * |value|). Endpoint singularities that are integrable
/// (log, x^-a with a < 1) converge by repeated bisection toward the endpoint.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                                    int max_segments = 4000) {
    QuadratureResult out;
    if (!(b > a)) return out;
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gauss_kronrod_15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    int segments = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (segments >= max_segments) {
            out.value = total;
            out.error = total_err;
            return out;
        }
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Segment cannot be split further in double precision.
            out.value = total;
            out.error = total_err;
            return out;
        }
        auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }
    // Re-sum to shed accumulated update drift.
    double v = 0.0, e = 0.0;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error;
        heap.pop();
    }
    out.value = v;
    out.error = e;
    out.converged = true;
    return out;
}

/// Like integrate_adaptive but throws NonIntegrableError if the tolerance is
/// not met.
template <class F>
double integrate_or_throw(F&& f, double a, double b, double abs_tol, double rel_tol, int max_segments = 4000) {
    auto r = integrate_adaptive(f, a, b, abs_tol, rel_tol, max_segments);
    if (!r.converged) {
        throw NonIntegrableError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "]: error estimate " + std::to_string(r.error));
    }
    return r.value;
}

}  // namespace renorm
